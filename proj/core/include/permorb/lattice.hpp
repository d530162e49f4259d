#pragma once

#include "permorb/cyclotomic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace permorb {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Integer coordinates in the lattice basis.
struct LatVec {
  std::vector<std::int64_t> c;

  LatVec() = default;
  explicit LatVec(std::size_t rank) : c(rank, 0) {}
  explicit LatVec(std::vector<std::int64_t> coords) : c(std::move(coords)) {}
  LatVec(std::initializer_list<std::int64_t> coords) : c(coords) {}

  std::size_t rank() const { return c.size(); }
  bool is_zero() const;
  static LatVec unit(std::size_t rank, std::size_t i);

  LatVec& operator+=(const LatVec& o);
  LatVec& operator-=(const LatVec& o);
  LatVec operator-() const;
  friend LatVec operator+(LatVec a, const LatVec& b) { return a += b; }
  friend LatVec operator-(LatVec a, const LatVec& b) { return a -= b; }
  friend LatVec operator*(std::int64_t s, LatVec a) {
    for (auto& x : a.c) x *= s;
    return a;
  }
  friend auto operator<=>(const LatVec&, const LatVec&) = default;
  friend bool operator==(const LatVec&, const LatVec&) = default;

  std::string to_string() const;
};

// Cyclotomic coordinates in the lattice basis: vectors of h = C (x) L.
struct AmbVec {
  std::vector<Cyc> c;

  AmbVec() = default;
  explicit AmbVec(std::size_t rank) : c(rank, Cyc(0)) {}
  explicit AmbVec(std::vector<Cyc> coords) : c(std::move(coords)) {}
  explicit AmbVec(const LatVec& v);

  std::size_t rank() const { return c.size(); }
  bool is_zero() const;

  AmbVec& operator+=(const AmbVec& o);
  AmbVec& operator-=(const AmbVec& o);
  AmbVec& operator*=(const Cyc& s);
  friend AmbVec operator+(AmbVec a, const AmbVec& b) { return a += b; }
  friend AmbVec operator-(AmbVec a, const AmbVec& b) { return a -= b; }
  friend AmbVec operator*(const Cyc& s, AmbVec a) { return a *= s; }
  friend bool operator==(const AmbVec& a, const AmbVec& b);
  friend bool operator!=(const AmbVec& a, const AmbVec& b) { return !(a == b); }

  std::string to_string() const;
};

class Lattice {
 public:
  // Validates symmetry, evenness and positive definiteness.
  explicit Lattice(IntMatrix gram, std::string name = "");

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(gram_.size()); }
  const IntMatrix& gram() const { return gram_; }
  std::int64_t gram(int i, int j) const { return gram_[i][j]; }
  // Inverse Gram matrix; row i holds the coordinates of the dual basis vector b_i^*.
  const std::vector<std::vector<Rat>>& gram_inverse() const { return gram_inv_; }
  BigInt determinant() const;

  std::int64_t inner(const LatVec& a, const LatVec& b) const;
  Cyc inner(const AmbVec& a, const AmbVec& b) const;
  Rat inner(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
  std::int64_t norm(const LatVec& a) const { return inner(a, a); }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

 private:
  std::string name_;
  IntMatrix gram_;
  std::vector<std::vector<Rat>> gram_inv_;
};

// K^{(+)k}: block-diagonal Gram, slot-major coordinates (slot p, index i) -> p*d + i.
Lattice direct_sum_power(const Lattice& K, int k);

// The cyclic block shift on K^{(+)k}: (nu v)_p = v_{p+1 mod k}.
class CyclicIsometry {
 public:
  CyclicIsometry(int k, int block_rank);

  int k() const { return k_; }
  int block_rank() const { return d_; }
  int rank() const { return k_ * d_; }

  LatVec apply(const LatVec& v, long power = 1) const;
  AmbVec apply(const AmbVec& v, long power = 1) const;

  // Slot view helpers.
  LatVec slot(const LatVec& v, int p) const;
  LatVec embed(const LatVec& block, int p) const;  // block placed in slot p
  LatVec diagonal(const LatVec& block) const;      // (block, ..., block)
  LatVec slot_sum(const LatVec& v) const;          // sum over slots

 private:
  int k_;
  int d_;
};

Cyc inner(const Lattice& L, const AmbVec& a, const AmbVec& b);
AmbVec nu_apply(const CyclicIsometry& nu, const AmbVec& v, long power);

// (1/k) sum_j eta^{-nj} nu^j v: the component of v in the eta^n-eigenspace of nu.
AmbVec eigenprojection(const CyclicIsometry& nu, const RootsOfUnity& roots, const AmbVec& v, long n);

// All alpha with <alpha, alpha> <= 2*bound, lexicographically sorted.
std::vector<LatVec> enumerate_up_to_norm(const Lattice& L, const Rat& bound);

// All alpha with <alpha + shift, alpha + shift> <= 2*bound, lexicographically sorted.
std::vector<LatVec> enumerate_shifted(const Lattice& L, const std::vector<Rat>& shift, const Rat& bound);

struct SmithForm {
  IntMatrix U, V;                       // unimodular, U * A * V = diag(d)
  std::vector<std::int64_t> diagonal;   // d_1 | d_2 | ...
};
SmithForm smith_normal_form(const IntMatrix& A);

// Row Hermite normal form of the row span (zero rows removed).
IntMatrix hermite_normal_form(IntMatrix rows);

// One representative (rational coordinates) per class of K^* / K; the first is 0.
std::vector<std::vector<Rat>> dual_coset_reps_rational(const Lattice& K);
std::vector<AmbVec> dual_coset_reps(const Lattice& K);

bool in_dual(const Lattice& K, const std::vector<Rat>& v);

}  // namespace permorb
