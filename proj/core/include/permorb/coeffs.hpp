#pragma once

#include "permorb/fock.hpp"

#include <map>
#include <string>
#include <vector>

namespace permorb {

// Truncated power series in two variables, sum c(m, n) x^m y^n with m + n <= order.
class BiSeries {
 public:
  explicit BiSeries(int order, const Cyc& zero = Cyc(0));

  int order() const { return order_; }
  const Cyc& at(int m, int n) const;
  Cyc& at(int m, int n);

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator*=(const Cyc& s);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

 private:
  int order_;
  std::vector<Cyc> c_;  // triangular, row m holds n = 0..order-m
  std::size_t offset(int m, int n) const;
};

// Generating series of c_{m n r}: -1/2 sum_j log(...) for r = 0, 1/2 log(...) otherwise.
BiSeries c_coeffs(int k, int r, int order);

// a_1..a_count (index j-1 holds a_j).
std::vector<Rat> a_coeffs(int k, int count);

// Expands exp(-sum a_j x^{j+1} d/dx) x through x^degree; used to check a_coeffs.
std::vector<Rat> a_substitution(const std::vector<Rat>& a, int degree);

// A finite Laurent polynomial in a formal variable with state coefficients.
class XPolyOp {
 public:
  explicit XPolyOp(Sector sector) : sector_(sector) {}

  Sector sector() const { return sector_; }
  const std::map<Rat, StateVector>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Rat& exponent, const StateVector& v);
  StateVector coefficient(const Rat& exponent) const;

  friend bool operator==(const XPolyOp& a, const XPolyOp& b) { return a.sector_ == b.sector_ && a.terms_ == b.terms_; }
  std::string to_string() const;

 private:
  Sector sector_;
  std::map<Rat, StateVector> terms_;
};

// Delta_x v and exp(Delta_x) v on V_L.
XPolyOp delta_apply(const FockSpace& VL, const StateVector& v);
XPolyOp exp_delta_apply(const FockSpace& VL, const StateVector& v);

// E_f(t) v and E_f(t)^{-1} v on V_K in the variable t = x^{1/k}:
//   E_f(t)      = exp(sum_j a_j t^{-j} L(j)) k^{-L(0)} t^{(1-k) L(0)}
//   E_f(t)^{-1} = t^{(k-1) L(0)} k^{L(0)} exp(-sum_j a_j t^{-j} L(j))
XPolyOp ef_apply(const FockSpace& VK, const StateVector& v);
XPolyOp ef_inverse_apply(const FockSpace& VK, const StateVector& v);
XPolyOp ef_inverse_apply(const FockSpace& VK, const XPolyOp& v);

}  // namespace permorb
