#include "permorb/coeffs.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace permorb {

BiSeries::BiSeries(int order, const Cyc& zero) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  c_.assign(static_cast<std::size_t>((order + 1) * (order + 2) / 2), zero);
}

std::size_t BiSeries::offset(int m, int n) const {
  if (m < 0 || n < 0 || m + n > order_) throw std::out_of_range("bi-series index beyond truncation");
  // rows m = 0..order, row m has order - m + 1 entries
  const int before = m * (order_ + 1) - m * (m - 1) / 2;
  return static_cast<std::size_t>(before + n);
}

const Cyc& BiSeries::at(int m, int n) const { return c_[offset(m, n)]; }
Cyc& BiSeries::at(int m, int n) { return c_[offset(m, n)]; }

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  if (o.order_ != order_) throw std::invalid_argument("bi-series order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

BiSeries& BiSeries::operator*=(const Cyc& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("bi-series order mismatch");
  const int M = a.order_;
  BiSeries r(M);
  for (int m1 = 0; m1 <= M; ++m1)
    for (int n1 = 0; m1 + n1 <= M; ++n1) {
      const Cyc& x = a.at(m1, n1);
      if (x.is_zero()) continue;
      for (int m2 = 0; m1 + n1 + m2 <= M; ++m2)
        for (int n2 = 0; m1 + n1 + m2 + n2 <= M; ++n2) {
          const Cyc& y = b.at(m2, n2);
          if (!y.is_zero()) r.at(m1 + m2, n1 + n2) += x * y;
        }
    }
  return r;
}

namespace {

// log(1 + u) for u without constant term.
BiSeries log1p(const BiSeries& u) {
  const int M = u.order();
  BiSeries result(M), power = u;
  for (int j = 1; j <= M; ++j) {
    BiSeries term = power;
    term *= Cyc(rat(j % 2 == 1 ? 1 : -1, j));
    result += term;
    power = power * u;
  }
  return result;
}

// log of ((1+x)^{1/k} - zeta (1+y)^{1/k}) / (1 - zeta).
BiSeries log_ratio(int k, const Cyc& zeta, int M) {
  BiSeries u(M);
  const Cyc inv = (Cyc(1) - zeta).inverse();
  for (int n = 1; n <= M; ++n) {
    const Rat b = binom(rat(1, k), n);
    u.at(n, 0) += Cyc(b) * inv;
    u.at(0, n) -= Cyc(b) * zeta * inv;
  }
  return log1p(u);
}

std::mutex cache_mutex;

}  // namespace

BiSeries c_coeffs(int k, int r, int order) {
  if (k < 1) throw std::invalid_argument("cycle length must be positive");
  if (r < 0 || r >= k) throw std::invalid_argument("residue out of range");
  static std::map<std::tuple<int, int, int>, BiSeries> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({k, r, order});
    if (it != cache.end()) return it->second;
  }
  RootsOfUnity roots(k);
  BiSeries s(order);
  if (r == 0) {
    for (int j = 1; j < k; ++j) s += log_ratio(k, roots.eta(-j), order);
    s *= Cyc(rat(-1, 2));
  } else {
    s = log_ratio(k, roots.eta(-r), order);
    s *= Cyc(rat(1, 2));
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::make_tuple(k, r, order), s);
  return s;
}

std::vector<Rat> a_substitution(const std::vector<Rat>& a, int degree) {
  std::vector<Rat> total(degree + 1, Rat(0)), term(degree + 1, Rat(0));
  if (degree >= 1) term[1] = 1;
  for (int i = 1; degree >= 1; ++i) {
    bool nonzero = false;
    for (int e = 0; e <= degree; ++e) {
      total[e] += term[e];
      nonzero = nonzero || term[e] != 0;
    }
    if (!nonzero) break;
    // next = -(1/i) sum_j a_j x^{j+1} d/dx term
    std::vector<Rat> next(degree + 1, Rat(0));
    for (int e = 1; e <= degree; ++e) {
      if (term[e] == 0) continue;
      for (std::size_t j = 1; j <= a.size() && e - 1 + static_cast<int>(j) + 1 <= degree; ++j)
        next[e + j] -= a[j - 1] * term[e] * e / i;
    }
    term = std::move(next);
  }
  return total;
}

std::vector<Rat> a_coeffs(int k, int count) {
  if (k < 1) throw std::invalid_argument("cycle length must be positive");
  static std::map<int, std::vector<Rat>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(k);
    if (it != cache.end() && static_cast<int>(it->second.size()) >= count)
      return std::vector<Rat>(it->second.begin(), it->second.begin() + count);
  }
  std::vector<Rat> a(count, Rat(0));
  for (int j = 1; j <= count; ++j) {
    a[j - 1] = 0;
    const auto s = a_substitution(a, j + 1);
    a[j - 1] = s[j + 1] - binom(Rat(k), j + 1) / k;
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache[k] = a;
  return a;
}

void XPolyOp::add(const Rat& exponent, const StateVector& v) {
  if (v.sector() != sector_) throw std::invalid_argument("sector mismatch in x-polynomial");
  if (v.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

StateVector XPolyOp::coefficient(const Rat& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? StateVector(sector_) : it->second;
}

std::string XPolyOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "x^(" << e.get_str() << ") [" << v.to_string() << "]";
  }
  return os.str();
}

XPolyOp delta_apply(const FockSpace& VL, const StateVector& v) {
  if (VL.sector() != Sector::UntwistedL || v.sector() != Sector::UntwistedL)
    throw std::invalid_argument("sector mismatch: Delta_x acts on V_L");
  XPolyOp out(Sector::UntwistedL);
  if (v.is_zero()) return out;
  const int k = VL.k(), d = VL.d();
  const int E = static_cast<int>(v.max_energy_units());
  if (E == 0) return out;
  std::vector<BiSeries> c;
  for (int r = 0; r < k; ++r) c.push_back(c_coeffs(k, r, E));
  const auto& ginv = VL.ext().K().gram_inverse();
  for (int n = 0; n <= E; ++n)
    for (int p = 0; p < k; ++p)
      for (int ip = 0; ip < d; ++ip) {
        const StateVector w1 = VL.apply_field(VL.basis_vector(p * d + ip), n, v);
        if (w1.is_zero()) continue;
        for (int m = (n == 0 ? 1 : 0); m + n <= E; ++m) {
          AmbVec h(VL.field_rank());
          bool any = false;
          for (int r = 0; r < k; ++r) {
            const Cyc& cmn = c[r].at(m, n);
            if (cmn.is_zero()) continue;
            const int slot = (p + r) % k;
            for (int i = 0; i < d; ++i)
              if (ginv[i][ip] != 0) {
                h.c[slot * d + i] += cmn * Cyc(ginv[i][ip]);
                any = true;
              }
          }
          if (!any) continue;
          out.add(Rat(-(m + n)), VL.apply_field(h, m, w1));
        }
      }
  return out;
}

XPolyOp exp_delta_apply(const FockSpace& VL, const StateVector& v) {
  XPolyOp total(Sector::UntwistedL), term(Sector::UntwistedL);
  total.add(0, v);
  term.add(0, v);
  for (long i = 1; !term.is_zero(); ++i) {
    XPolyOp next(Sector::UntwistedL);
    for (const auto& [e, w] : term.terms()) {
      const XPolyOp dw = delta_apply(VL, w);
      for (const auto& [e2, w2] : dw.terms()) next.add(e + e2, Cyc(rat(1, i)) * w2);
    }
    for (const auto& [e, w] : next.terms()) total.add(e, w);
    term = std::move(next);
  }
  return total;
}

namespace {

void check_vk(const FockSpace& VK, const StateVector& v) {
  if (VK.sector() != Sector::UntwistedK || v.sector() != Sector::UntwistedK)
    throw std::invalid_argument("sector mismatch: E_f acts on V_K");
}

long max_weight(const FockSpace& VK, const XPolyOp& x) {
  long w = 0;
  for (const auto& [e, v] : x.terms())
    for (const auto& [m, c] : v.terms()) w = std::max(w, to_long(VK.weight(m)));
  return w;
}

// exp(sign * sum_j a_j t^{-j} L(j)) applied termwise.
XPolyOp exp_virasoro(const FockSpace& VK, const XPolyOp& x, int sign) {
  const long W = max_weight(VK, x);
  if (W == 0) return x;
  const auto a = a_coeffs(VK.k(), static_cast<int>(W));
  XPolyOp total = x, term = x;
  for (long i = 1; !term.is_zero(); ++i) {
    XPolyOp next(Sector::UntwistedK);
    for (const auto& [e, w] : term.terms())
      for (long j = 1; j <= W; ++j) {
        if (a[j - 1] == 0) continue;
        StateVector lw = VK.virasoro_L(j, w);
        if (lw.is_zero()) continue;
        next.add(e - j, Cyc(a[j - 1] * sign / i) * lw);
      }
    for (const auto& [e, w] : next.terms()) total.add(e, w);
    term = std::move(next);
  }
  return total;
}

// t^{s (k-1) L(0)} k^{s L(0)} per homogeneous component.
XPolyOp grade(const FockSpace& VK, const XPolyOp& x, int s) {
  const long k = VK.k();
  XPolyOp out(Sector::UntwistedK);
  for (const auto& [e, v] : x.terms())
    for (const auto& [m, c] : v.terms()) {
      const long w = to_long(VK.weight(m));
      StateVector t(Sector::UntwistedK);
      t.add(m, c * Cyc(pow(Rat(k), s * w)));
      out.add(e + Rat(s * (k - 1) * w), t);
    }
  return out;
}

}  // namespace

XPolyOp ef_apply(const FockSpace& VK, const StateVector& v) {
  check_vk(VK, v);
  XPolyOp x(Sector::UntwistedK);
  x.add(0, v);
  return exp_virasoro(VK, grade(VK, x, -1), 1);
}

XPolyOp ef_inverse_apply(const FockSpace& VK, const XPolyOp& v) {
  if (VK.sector() != Sector::UntwistedK || v.sector() != Sector::UntwistedK)
    throw std::invalid_argument("sector mismatch: E_f acts on V_K");
  return grade(VK, exp_virasoro(VK, v, -1), 1);
}

XPolyOp ef_inverse_apply(const FockSpace& VK, const StateVector& v) {
  check_vk(VK, v);
  XPolyOp x(Sector::UntwistedK);
  x.add(0, v);
  return ef_inverse_apply(VK, x);
}

}  // namespace permorb
