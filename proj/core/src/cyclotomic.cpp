#include "permorb/cyclotomic.hpp"

#include <numeric>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace permorb {

namespace {

using Poly = std::vector<BigInt>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of monic-divisor integer polynomials.
Poly divide_exact(Poly num, const Poly& den) {
  trim(num);
  const std::size_t dn = den.size() - 1;
  if (num.size() - 1 < dn) throw std::logic_error("cyclotomic division degree");
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    BigInt c = num[i] / den[dn];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw std::logic_error("cyclotomic division not exact");
  return q;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, Poly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  memo.emplace(n, p);
  return p;
}

CycField::CycField(int n) : n_(n), cyclo_(cyclotomic_polynomial(n)) {
  phi_ = static_cast<int>(cyclo_.size()) - 1;
  const int count = std::max(n_, 2 * phi_ - 1);
  pow_.reserve(count);
  std::vector<Rat> cur(phi_, Rat(0));
  cur[0] = 1;
  for (int e = 0; e < count; ++e) {
    pow_.push_back(cur);
    // multiply by x and reduce with the monic modulus
    Rat top = cur[phi_ - 1];
    for (int i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi_; ++i) cur[i] -= top * Rat(cyclo_[i]);
  }
}

const CycField& CycField::get(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycField>> fields;
  std::lock_guard lock(mu);
  auto& slot = fields[n];
  if (!slot) slot.reset(new CycField(n));
  return *slot;
}

Cyc::Cyc(const CycField& f, const Rat& r) : field_(&f), c_(f.degree(), Rat(0)) { c_[0] = r; }

Cyc::Cyc(const CycField& f, std::vector<Rat> coeffs) : field_(&f), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) > f.degree()) {
    std::vector<Rat> red(f.degree(), Rat(0));
    const auto& pw = f.reduced_powers();
    for (std::size_t e = 0; e < c_.size(); ++e) {
      if (c_[e] == 0) continue;
      if (e >= pw.size()) throw std::logic_error("coefficient vector too long for reduction");
      for (int i = 0; i < f.degree(); ++i) red[i] += c_[e] * pw[e][i];
    }
    c_ = std::move(red);
  }
  c_.resize(f.degree(), Rat(0));
}

Cyc Cyc::root(int n, long e) {
  const auto& f = CycField::get(n);
  long r = ((e % n) + n) % n;
  return Cyc(f, f.reduced_powers()[r]);
}

bool Cyc::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyc::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + to_string());
  return c_[0];
}

// Q(zeta_m) sits in Q(zeta_n) for m | n via zeta_m -> zeta_n^{n/m}.
Cyc Cyc::lifted_to(const CycField& f) const {
  if (field_ == &f) return *this;
  if (field_->is_rational()) return Cyc(f, c_[0]);
  if (f.order() % field_->order() != 0) throw std::invalid_argument("cyclotomic field does not embed");
  const long step = f.order() / field_->order();
  Cyc r(f, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) r += Cyc::root(f.order(), static_cast<long>(i) * step) * Cyc(c_[i]);
  return r;
}

const CycField& common_field(const Cyc& a, const Cyc& b) {
  if (a.field_ == b.field_) return *a.field_;
  if (a.field_->is_rational()) return *b.field_;
  if (b.field_->is_rational()) return *a.field_;
  return CycField::get(std::lcm(a.field_->order(), b.field_->order()));
}

Cyc Cyc::operator-() const {
  Cyc r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  const auto& f = common_field(*this, o);
  if (field_ != &f) *this = lifted_to(f);
  if (o.field_ == &f) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else if (o.field_->is_rational()) {
    c_[0] += o.c_[0];
  } else {
    const Cyc other = o.lifted_to(f);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  }
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  const auto& f = common_field(*this, o);
  if (field_ != &f) *this = lifted_to(f);
  if (o.field_ == &f) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  } else if (o.field_->is_rational()) {
    c_[0] -= o.c_[0];
  } else {
    const Cyc other = o.lifted_to(f);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
  }
  return *this;
}

Cyc& Cyc::operator*=(const Rat& r) {
  for (auto& v : c_) v *= r;
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  if (o.is_rational()) return *this *= o.c_[0];
  if (is_rational()) {
    Rat s = c_[0];
    *this = o;
    return *this *= s;
  }
  const auto& f = common_field(*this, o);
  const Cyc a = lifted_to(f), b = o.lifted_to(f);
  const int phi = f.degree();
  std::vector<Rat> prod(2 * phi - 1, Rat(0));
  for (int i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  *this = Cyc(f, std::move(prod));
  return *this;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (is_rational()) return Cyc(*field_, Rat(1) / c_[0]);
  const auto& f = *field_;
  const int phi = f.degree();
  // Solve (this * y) = 1: column j of the matrix is this * x^j.
  std::vector<std::vector<Rat>> m(phi, std::vector<Rat>(phi + 1, Rat(0)));
  for (int j = 0; j < phi; ++j) {
    Cyc col = *this * Cyc(f, f.reduced_powers()[j]);
    for (int i = 0; i < phi; ++i) m[i][j] = col.c_[i];
  }
  m[0][phi] = 1;
  for (int col = 0; col < phi; ++col) {
    int piv = col;
    while (piv < phi && m[piv][col] == 0) ++piv;
    if (piv == phi) throw std::logic_error("singular multiplication matrix in cyclotomic field");
    std::swap(m[piv], m[col]);
    Rat inv = Rat(1) / m[col][col];
    for (int j = col; j <= phi; ++j) m[col][j] *= inv;
    for (int r = 0; r < phi; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat factor = m[r][col];
      for (int j = col; j <= phi; ++j) m[r][j] -= factor * m[col][j];
    }
  }
  std::vector<Rat> y(phi);
  for (int i = 0; i < phi; ++i) y[i] = m[i][phi];
  return Cyc(f, std::move(y));
}

Cyc Cyc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyc result(*field_, Rat(1)), b(*this);
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.field_ == b.field_) return a.c_ == b.c_;
  if (a.field_->is_rational() || b.field_->is_rational()) {
    if (!a.is_rational() || !b.is_rational()) return false;
    return a.c_[0] == b.c_[0];
  }
  const CycField& f = common_field(a, b);
  return a.lifted_to(f).c_ == b.lifted_to(f).c_;
}

std::string Cyc::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat v = c_[i];
    bool neg = v < 0;
    if (neg) v = -v;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (i == 0) {
      out += v.get_str();
    } else {
      if (v != 1) out += v.get_str() + "*";
      out += i == 1 ? "z" : "z^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

RootsOfUnity::RootsOfUnity(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("cycle length must be positive");
  field_ = &CycField::get(2 * k);
  if (k % 2 == 1) {
    eta0_order_ = 2 * k;
    eta0_in_zeta_ = k + 2;
    eta_in_eta0_ = k + 1;  // eta0^{k+1} = zeta^{(k+2)(k+1)} = zeta^2
    minus_one_in_eta0_ = k;
  } else {
    eta0_order_ = k;
    eta0_in_zeta_ = 2;
    eta_in_eta0_ = 1;
    minus_one_in_eta0_ = k / 2;
  }
}

Cyc RootsOfUnity::eta(long e) const { return Cyc::root(2 * k_, 2 * e); }

Cyc RootsOfUnity::eta0(long s) const { return Cyc::root(2 * k_, eta0_in_zeta_ * s); }

Cyc lemma_root_sum(int m) {
  if (m < 1) throw std::invalid_argument("lemma_root_sum needs m >= 1");
  Cyc sum(CycField::get(m), Rat(0));
  const Cyc one(CycField::get(m), Rat(1));
  for (int j = 1; j < m; ++j) {
    Cyc w = Cyc::root(m, -j);
    Cyc den = one - w;
    sum += w / (den * den);
  }
  return sum;
}

}  // namespace permorb
