#pragma once

#include "permorb/lattice.hpp"
#include "permorb/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace permorb {

// Truncated q-series with exponents in (1/den)Z. All coefficients with
// exponent <= order are exact; nothing beyond order is stored.
class FracQSeries {
 public:
  explicit FracQSeries(const Rat& order, long den = 1);
  static FracQSeries monomial(const Rat& exponent, const Rat& coeff, const Rat& order);

  const Rat& order() const { return order_; }
  long den() const { return den_; }
  bool is_zero() const { return c_.empty(); }

  // (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<Rat, Rat>> terms() const;
  Rat coefficient(const Rat& exponent) const;
  Rat leading_exponent() const;  // throws on the zero series
  Rat leading_coefficient() const;

  void add_term(const Rat& exponent, const Rat& coeff);

  FracQSeries& operator+=(const FracQSeries& o);
  friend FracQSeries operator+(FracQSeries a, const FracQSeries& b) { return a += b; }
  friend FracQSeries operator*(const FracQSeries& a, const FracQSeries& b);
  FracQSeries inverse() const;               // needs a nonzero leading coefficient
  FracQSeries shifted(const Rat& e) const;   // q^e * this
  FracQSeries substitute_power(long k) const;  // q -> q^k
  FracQSeries truncated(const Rat& order) const;

  // Equal coefficients for all exponents <= order.
  bool agrees_with(const FracQSeries& o, const Rat& order) const;
  std::string to_string() const;

 private:
  Rat order_;
  long den_;
  std::map<long, Rat> c_;  // exponent e / den_

  void rescale(long den);
};

// eta(q)^d = q^{d/24} prod (1 - q^n)^d.
FracQSeries eta_power(long d, const Rat& order);

// sum over alpha in L of q^{<alpha + shift, alpha + shift>/2}; shift must lie in L^*.
FracQSeries theta_series(const Lattice& L, const Rat& order, const std::optional<std::vector<Rat>>& shift = {});

FracQSeries char_voa(const Lattice& K, const Rat& order);
FracQSeries char_coset(const Lattice& K, const std::vector<Rat>& beta, const Rat& order);
FracQSeries char_twisted(const Lattice& K, int k, const Rat& order);
FracQSeries char_cycle_type(const Lattice& K, const std::vector<int>& cycle_lengths, const Rat& order);

// Smallest <gamma, gamma> over gamma in beta + K.
Rat coset_min_norm(const Lattice& K, const std::vector<Rat>& beta);

struct CosetCheck {
  std::vector<Rat> beta;
  Rat leading_exponent;
  Rat min_norm;
};

struct CharacterComparison {
  FracQSeries twisted_substituted;  // char_twisted(K, k)(q^k)
  FracQSeries voa;                  // char_voa(K)
  std::vector<CosetCheck> cosets;   // nonzero classes of K^*/K
  Report report;
};

CharacterComparison compare_characters(const Lattice& K, int k, const Rat& order);

}  // namespace permorb
