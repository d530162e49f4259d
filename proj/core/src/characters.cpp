#include "permorb/characters.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permorb {

namespace {

long lcm(long a, long b) { return std::lcm(a, b); }

long den_of(const Rat& r) { return to_long(Rat(r.get_den())); }

// prod_{n>=1} (1 - y^n)^{-d} through y^N.
std::vector<Rat> inverse_euler_power(long d, long N) {
  std::vector<Rat> p(N + 1, Rat(0));
  if (N < 0) return p;
  p[0] = 1;
  for (long n = 1; n <= N; ++n)
    for (long t = 0; t < d; ++t)
      for (long i = n; i <= N; ++i) p[i] += p[i - n];
  return p;
}

}  // namespace

FracQSeries::FracQSeries(const Rat& order, long den) : order_(order), den_(den) {
  if (den < 1) throw std::invalid_argument("series exponent denominator must be positive");
}

FracQSeries FracQSeries::monomial(const Rat& exponent, const Rat& coeff, const Rat& order) {
  FracQSeries s(order);
  s.add_term(exponent, coeff);
  return s;
}

void FracQSeries::rescale(long den) {
  if (den == den_) return;
  if (den % den_ != 0) throw std::logic_error("series rescale to a non-multiple denominator");
  const long f = den / den_;
  std::map<long, Rat> c;
  for (const auto& [e, v] : c_) c.emplace(e * f, v);
  c_ = std::move(c);
  den_ = den;
}

std::vector<std::pair<Rat, Rat>> FracQSeries::terms() const {
  std::vector<std::pair<Rat, Rat>> out;
  for (const auto& [e, v] : c_) out.emplace_back(rat(e, den_), v);
  return out;
}

Rat FracQSeries::coefficient(const Rat& exponent) const {
  if (exponent > order_) throw std::out_of_range("coefficient beyond series truncation");
  const Rat key = exponent * den_;
  if (!is_integer(key)) return 0;
  auto it = c_.find(to_long(key));
  return it == c_.end() ? Rat(0) : it->second;
}

Rat FracQSeries::leading_exponent() const {
  if (c_.empty()) throw std::domain_error("zero series has no leading exponent");
  return rat(c_.begin()->first, den_);
}

Rat FracQSeries::leading_coefficient() const {
  if (c_.empty()) throw std::domain_error("zero series has no leading coefficient");
  return c_.begin()->second;
}

void FracQSeries::add_term(const Rat& exponent, const Rat& coeff) {
  if (exponent > order_ || coeff == 0) return;
  rescale(lcm(den_, den_of(exponent)));
  const long key = to_long(exponent * den_);
  Rat& slot = c_[key];
  slot += coeff;
  if (slot == 0) c_.erase(key);
}

FracQSeries& FracQSeries::operator+=(const FracQSeries& o) {
  order_ = std::min(order_, o.order_);
  rescale(lcm(den_, o.den_));
  for (const auto& [e, v] : o.terms()) add_term(e, v);
  return *this = truncated(order_);
}

FracQSeries operator*(const FracQSeries& a, const FracQSeries& b) {
  Rat order;
  if (a.is_zero() && b.is_zero())
    order = a.order_ + b.order_;
  else if (a.is_zero())
    order = a.order_ + b.leading_exponent();
  else if (b.is_zero())
    order = b.order_ + a.leading_exponent();
  else
    order = std::min(a.order_ + b.leading_exponent(), b.order_ + a.leading_exponent());
  const long den = lcm(a.den_, b.den_);
  FracQSeries r(order, den);
  const long fa = den / a.den_, fb = den / b.den_;
  const Rat limit = order * den;
  for (const auto& [ea, va] : a.c_)
    for (const auto& [eb, vb] : b.c_) {
      const long e = ea * fa + eb * fb;
      if (Rat(e) > limit) break;
      Rat& slot = r.c_[e];
      slot += va * vb;
      if (slot == 0) r.c_.erase(e);
    }
  return r;
}

FracQSeries FracQSeries::inverse() const {
  if (c_.empty()) throw std::domain_error("zero series is not invertible");
  const long lead = c_.begin()->first;
  const Rat c0 = c_.begin()->second;
  const Rat rel = order_ - rat(lead, den_);  // relative precision
  const long P = floor(rel * den_).get_si();
  std::vector<Rat> a(P + 1, Rat(0)), b(P + 1, Rat(0));
  for (const auto& [e, v] : c_)
    if (e - lead <= P) a[e - lead] = v;
  b[0] = 1 / c0;
  for (long e = 1; e <= P; ++e) {
    Rat s = 0;
    for (long j = 1; j <= e; ++j)
      if (a[j] != 0 && b[e - j] != 0) s += a[j] * b[e - j];
    b[e] = -s / c0;
  }
  FracQSeries r(rel - rat(lead, den_), den_);
  for (long e = 0; e <= P; ++e)
    if (b[e] != 0) r.c_[e - lead] = b[e];
  return r;
}

FracQSeries FracQSeries::shifted(const Rat& e) const {
  FracQSeries r(order_ + e, lcm(den_, den_of(e)));
  const long f = r.den_ / den_;
  const long k = to_long(e * r.den_);
  for (const auto& [x, v] : c_) r.c_.emplace(x * f + k, v);
  return r;
}

FracQSeries FracQSeries::substitute_power(long k) const {
  if (k < 1) throw std::invalid_argument("substitution power must be positive");
  FracQSeries r(order_ * k, den_);
  for (const auto& [x, v] : c_) r.c_.emplace(x * k, v);
  return r;
}

FracQSeries FracQSeries::truncated(const Rat& order) const {
  FracQSeries r(std::min(order, order_), den_);
  for (const auto& [x, v] : c_)
    if (rat(x, den_) <= r.order_) r.c_.emplace(x, v);
  return r;
}

bool FracQSeries::agrees_with(const FracQSeries& o, const Rat& order) const {
  if (order_ < order || o.order_ < order) throw std::invalid_argument("series known only to a lower order");
  const auto a = truncated(order).terms(), b = o.truncated(order).terms();
  return a == b;
}

std::string FracQSeries::to_string() const {
  std::ostringstream os;
  for (const auto& [e, v] : terms()) os << v.get_str() << "*q^(" << e.get_str() << ") + ";
  os << "O(q^(" << order_.get_str() << "+))";
  return os.str();
}

FracQSeries eta_power(long d, const Rat& order) {
  if (d < 0) throw std::invalid_argument("eta power must be nonnegative");
  const Rat lead = rat(d, 24);
  FracQSeries s(order, 24);
  if (order < lead) return s;
  const long N = floor(order - lead).get_si();
  std::vector<Rat> p(N + 1, Rat(0));
  p[0] = 1;
  for (long n = 1; n <= N; ++n)
    for (long t = 0; t < d; ++t)
      for (long i = N; i >= n; --i) p[i] -= p[i - n];
  for (long i = 0; i <= N; ++i) s.add_term(lead + i, p[i]);
  return s;
}

FracQSeries theta_series(const Lattice& L, const Rat& order, const std::optional<std::vector<Rat>>& shift) {
  FracQSeries s(order);
  if (order < 0) return s;
  if (!shift) {
    for (const auto& a : enumerate_up_to_norm(L, order)) s.add_term(rat(L.norm(a), 2), 1);
    return s;
  }
  if (static_cast<int>(shift->size()) != L.rank()) throw std::invalid_argument("shift rank mismatch");
  if (!in_dual(L, *shift)) throw std::invalid_argument("shift not in the dual lattice");
  for (const auto& a : enumerate_shifted(L, *shift, order)) {
    std::vector<Rat> v(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) v[i] = Rat(static_cast<long>(a.c[i])) + (*shift)[i];
    s.add_term(L.inner(v, v) / 2, 1);
  }
  return s;
}

namespace {

// q^{-d/24s} * theta * prod (1 - q^{n/s})^{-d}, theta already built to order + d/24s.
FracQSeries lattice_character(long d, long s, const FracQSeries& theta, const Rat& order) {
  const Rat lead = rat(d, 24 * s);
  const Rat T = order + lead;
  FracQSeries p(T, s);
  if (T >= 0) {
    const auto coeffs = inverse_euler_power(d, floor(T * s).get_si());
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(rat(static_cast<long>(i), s), coeffs[i]);
  }
  return (theta.truncated(T) * p).shifted(-lead).truncated(order);
}

}  // namespace

FracQSeries char_voa(const Lattice& K, const Rat& order) {
  const Rat T = order + rat(K.rank(), 24);
  return lattice_character(K.rank(), 1, theta_series(K, T), order);
}

FracQSeries char_coset(const Lattice& K, const std::vector<Rat>& beta, const Rat& order) {
  const Rat T = order + rat(K.rank(), 24);
  return lattice_character(K.rank(), 1, theta_series(K, T, beta), order);
}

FracQSeries char_twisted(const Lattice& K, int k, const Rat& order) {
  if (k < 1) throw std::invalid_argument("cycle length must be positive");
  const long d = K.rank();
  const Rat T = order + rat(d, 24 * k);
  FracQSeries theta(T);
  if (T >= 0)
    for (const auto& a : enumerate_up_to_norm(K, T * k)) theta.add_term(rat(K.norm(a), 2 * k), 1);
  return lattice_character(d, k, theta, order);
}

FracQSeries char_cycle_type(const Lattice& K, const std::vector<int>& cycle_lengths, const Rat& order) {
  const long d = K.rank();
  Rat lead_sum = 0;
  for (int k : cycle_lengths) lead_sum -= rat(d, 24 * k);
  FracQSeries r = FracQSeries::monomial(0, 1, order - lead_sum);
  for (int k : cycle_lengths) {
    const Rat own = -rat(d, 24 * k);
    r = r * char_twisted(K, k, order - (lead_sum - own));
  }
  return r.truncated(order);
}

Rat coset_min_norm(const Lattice& K, const std::vector<Rat>& beta) {
  for (Rat bound = 1;; bound *= 2) {
    const auto vs = enumerate_shifted(K, beta, bound);
    if (vs.empty()) continue;
    Rat best = -1;
    for (const auto& a : vs) {
      std::vector<Rat> v(a.rank());
      for (std::size_t i = 0; i < a.rank(); ++i) v[i] = Rat(static_cast<long>(a.c[i])) + beta[i];
      const Rat n = K.inner(v, v);
      if (best < 0 || n < best) best = n;
    }
    return best;
  }
}

CharacterComparison compare_characters(const Lattice& K, int k, const Rat& order) {
  const long d = K.rank();
  CharacterComparison res{char_twisted(K, k, order / k).substitute_power(k), char_voa(K, order), {},
                  Report{"identity", "char_twisted(K,k)(q^k) = char_voa(K)", true, ""}};
  const auto a = res.twisted_substituted.truncated(order).terms();
  const auto b = res.voa.truncated(order).terms();
  if (a != b) {
    res.report.pass = false;
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    std::ostringstream os;
    os << "first difference: twisted "
       << (i < a.size() ? a[i].second.get_str() + "*q^(" + a[i].first.get_str() + ")" : "<end>") << " vs voa "
       << (i < b.size() ? b[i].second.get_str() + "*q^(" + b[i].first.get_str() + ")" : "<end>");
    res.report.witness = os.str();
  }
  const Rat voa_lead = -rat(d, 24);
  const auto reps = dual_coset_reps_rational(K);
  for (std::size_t i = 1; i < reps.size(); ++i) {
    const Rat mn = coset_min_norm(K, reps[i]);
    const FracQSeries ch = char_coset(K, reps[i], std::max(order, Rat(mn / 2 + voa_lead)));
    const Rat lead = ch.leading_exponent();
    res.cosets.push_back(CosetCheck{reps[i], lead, mn});
    if (lead == voa_lead || lead - voa_lead != mn / 2 || mn <= 0) {
      res.report.pass = false;
      if (res.report.witness.empty()) res.report.witness = "coset leading exponent " + lead.get_str() + " not separated";
    }
  }
  return res;
}

}  // namespace permorb
