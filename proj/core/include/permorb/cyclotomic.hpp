#pragma once

#include "permorb/rational.hpp"

#include <string>
#include <vector>

namespace permorb {

// Q(zeta_n) presented as Q[x]/Phi_n(x). Instances are interned: one per n,
// never destroyed, so Cyc values can hold a plain pointer.
class CycField {
 public:
  static const CycField& get(int n);

  int order() const { return n_; }
  int degree() const { return phi_; }
  bool is_rational() const { return phi_ == 1; }
  const std::vector<BigInt>& modulus() const { return cyclo_; }
  // x^e reduced mod Phi_n, for 0 <= e < reduced_powers().size().
  const std::vector<std::vector<Rat>>& reduced_powers() const { return pow_; }

 private:
  explicit CycField(int n);
  int n_;
  int phi_;
  std::vector<BigInt> cyclo_;
  std::vector<std::vector<Rat>> pow_;
};

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<BigInt> cyclotomic_polynomial(int n);

class Cyc {
 public:
  Cyc() : Cyc(CycField::get(1), Rat(0)) {}
  Cyc(const Rat& r) : Cyc(CycField::get(1), r) {}  // NOLINT: implicit by design
  Cyc(long v) : Cyc(Rat(v)) {}                      // NOLINT
  Cyc(int v) : Cyc(Rat(v)) {}                       // NOLINT
  Cyc(const CycField& f, const Rat& r);
  Cyc(const CycField& f, std::vector<Rat> coeffs);

  // zeta_n^e.
  static Cyc root(int n, long e);

  const CycField& field() const { return *field_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat to_rational() const;  // throws unless is_rational()

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o) { return *this *= o.inverse(); }
  Cyc& operator*=(const Rat& r);

  Cyc inverse() const;
  Cyc pow(long e) const;

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // Polynomial in z = zeta_n, e.g. "1/3 - 2/3*z".
  std::string to_string() const;

 private:
  const CycField* field_;
  std::vector<Rat> c_;

  Cyc lifted_to(const CycField& f) const;
  friend const CycField& common_field(const Cyc& a, const Cyc& b);
};

// The roots of unity attached to a cycle length k, all inside Q(zeta_{2k}):
// eta = zeta^2 (primitive k-th root) and eta0 = zeta^{k+2} for odd k, eta for
// even k. Phases are tracked as exponents of eta0.
class RootsOfUnity {
 public:
  explicit RootsOfUnity(int k);

  int k() const { return k_; }
  const CycField& field() const { return *field_; }
  int eta0_order() const { return eta0_order_; }
  long eta_in_eta0() const { return eta_in_eta0_; }
  long minus_one_in_eta0() const { return minus_one_in_eta0_; }

  Cyc eta(long e) const;
  Cyc eta0(long s) const;
  Cyc scalar(const Rat& r) const { return Cyc(*field_, r); }
  long reduce_phase(long s) const { return ((s % eta0_order_) + eta0_order_) % eta0_order_; }

 private:
  int k_;
  const CycField* field_;
  int eta0_order_;
  long eta0_in_zeta_;
  long eta_in_eta0_;
  long minus_one_in_eta0_;
};

// Sum_{j=1}^{m-1} w^{-j} / (1 - w^{-j})^2 with w = zeta_m.
Cyc lemma_root_sum(int m);

}  // namespace permorb
