#include "permorb/cocycle.hpp"

#include <stdexcept>

namespace permorb {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

SectionCocycle::SectionCocycle(SectionKind kind, IntMatrix table, int modulus)
    : kind_(kind), table_(std::move(table)), modulus_(modulus) {}

long SectionCocycle::eps(const LatVec& a, const LatVec& b) const {
  const std::size_t n = table_.size();
  if (a.rank() != n || b.rank() != n) throw std::invalid_argument("rank mismatch in section cocycle");
  long s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c[i] == 0) continue;
    long row = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (table_[i][j] != 0) row += table_[i][j] * b.c[j];
    s = mod(s + mod(a.c[i], modulus_) * mod(row, modulus_), modulus_);
  }
  return s;
}

LatticeExtensions::LatticeExtensions(Lattice K, int k)
    : K_(std::move(K)),
      nu_(k, K_.rank()),
      L_(direct_sum_power(K_, k)),
      roots_(k),
      untwisted_(SectionKind::Untwisted, {}, roots_.eta0_order()),
      twisted_(SectionKind::Twisted, {}, roots_.eta0_order()) {
  const int n = L_.rank();
  IntMatrix t0(n, std::vector<std::int64_t>(n, 0));
  IntMatrix tn(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LatVec a = LatVec::unit(n, i), b = LatVec::unit(n, j);
      if (i > j) t0[i][j] = c0_exponent(a, b);
      tn[i][j] = roots_.reduce_phase(t0[i][j] - identification_exponent(a, b));
    }
  untwisted_ = SectionCocycle(SectionKind::Untwisted, std::move(t0), roots_.eta0_order());
  twisted_ = SectionCocycle(SectionKind::Twisted, std::move(tn), roots_.eta0_order());
  lift_untwisted_ = build_lift(untwisted_);
  lift_twisted_ = build_lift(twisted_);
}

long LatticeExtensions::phase_of_minus_eta_power(long j) const {
  return roots_.reduce_phase(roots_.minus_one_in_eta0() + j * roots_.eta_in_eta0());
}

long LatticeExtensions::c0_exponent(const LatVec& a, const LatVec& b) const {
  return roots_.reduce_phase(L_.inner(a, b) * roots_.minus_one_in_eta0());
}

long LatticeExtensions::c_exponent(const LatVec& a, const LatVec& b) const {
  long s = 0;
  for (int j = 0; j < k(); ++j) s += L_.inner(nu_.apply(a, j), b) * phase_of_minus_eta_power(j);
  return roots_.reduce_phase(s);
}

Cyc LatticeExtensions::commutator_C0(const LatVec& a, const LatVec& b) const { return roots_.eta0(c0_exponent(a, b)); }

Cyc LatticeExtensions::commutator_C(const LatVec& a, const LatVec& b) const { return roots_.eta0(c_exponent(a, b)); }

long LatticeExtensions::identification_exponent(const LatVec& a, const LatVec& b) const {
  long s = 0;
  for (int j = 1; 2 * j < k(); ++j) s += L_.inner(nu_.apply(a, -j), b) * phase_of_minus_eta_power(j);
  return roots_.reduce_phase(s);
}

CentralElem LatticeExtensions::mul(const CentralElem& a, const CentralElem& b, SectionKind kind) const {
  return CentralElem{a.base + b.base, roots_.reduce_phase(a.phase + b.phase + section(kind).eps(a.base, b.base))};
}

CentralElem LatticeExtensions::inverse(const CentralElem& a, SectionKind kind) const {
  return CentralElem{-a.base, roots_.reduce_phase(-a.phase - section(kind).eps(a.base, -a.base))};
}

CentralElem LatticeExtensions::commutator(const CentralElem& a, const CentralElem& b, SectionKind kind) const {
  CentralElem ab = mul(a, b, kind);
  CentralElem r = mul(ab, inverse(a, kind), kind);
  return mul(r, inverse(b, kind), kind);
}

LatticeExtensions::LiftData LatticeExtensions::build_lift(const SectionCocycle& s) const {
  const int n = L_.rank();
  const int d = K_.rank();
  LiftData data;
  data.B.assign(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LatVec a = LatVec::unit(n, i), b = LatVec::unit(n, j);
      data.B[i][j] = roots_.reduce_phase(s.eps(nu_.apply(a), nu_.apply(b)) - s.eps(a, b));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (roots_.reduce_phase(data.B[i][j] - data.B[j][i]) != 0)
        throw std::logic_error("lift correction is not symmetric; commutator map not nu-invariant");
  // rho fixes the diagonal: rho(b_j in slot 0) = -q_B(diagonal b_j), zero elsewhere.
  data.rho.assign(n, 0);
  for (int j = 0; j < d; ++j) {
    LatVec diag = nu_.diagonal(LatVec::unit(d, j));
    data.rho[j] = roots_.reduce_phase(-quadratic_part(data, diag));
  }
  return data;
}

long LatticeExtensions::quadratic_part(const LiftData& data, const LatVec& a) const {
  const std::size_t n = a.rank();
  long s = 0;
  const long m = roots_.eta0_order();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c[i] == 0) continue;
    const long ai = a.c[i];
    s += mod(ai * (ai - 1) / 2, m) * data.B[i][i];
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.c[j] != 0) s += mod(ai * a.c[j], m) * data.B[i][j];
    s = mod(s, m);
  }
  return s;
}

long LatticeExtensions::lift_phase(const LatVec& a, SectionKind kind) const {
  const LiftData& data = lift(kind);
  long s = quadratic_part(data, a);
  for (std::size_t i = 0; i < a.rank(); ++i) s += mod(a.c[i], roots_.eta0_order()) * data.rho[i];
  return roots_.reduce_phase(s);
}

CentralElem LatticeExtensions::nu_hat(const CentralElem& a, SectionKind kind, long power) const {
  const long p = mod(power, k());
  CentralElem r = a;
  for (long i = 0; i < p; ++i) r = CentralElem{nu_.apply(r.base), roots_.reduce_phase(r.phase + lift_phase(r.base, kind))};
  return r;
}

bool LatticeExtensions::in_N(const LatVec& a) const { return nu_.slot_sum(a).is_zero(); }

std::vector<LatVec> LatticeExtensions::N_generators() const {
  std::vector<LatVec> gens;
  const int d = K_.rank();
  for (int p = 0; p + 1 < k(); ++p)
    for (int i = 0; i < d; ++i) {
      LatVec u = LatVec::unit(d, i);
      gens.push_back(nu_.embed(u, p) - nu_.embed(u, k() - 1));
    }
  return gens;
}

std::vector<LatVec> LatticeExtensions::M_generators() const {
  std::vector<LatVec> gens;
  const int n = L_.rank();
  for (int i = 0; i < n; ++i) {
    LatVec b = LatVec::unit(n, i);
    gens.push_back(b - nu_.apply(b));
  }
  return gens;
}

Cyc LatticeExtensions::tau(const CentralElem& a) const {
  if (!in_N(a.base)) throw std::invalid_argument("tau is defined on N-hat only; base " + a.base.to_string() + " is not in N");
  const int d = K_.rank();
  // Solve (1 - nu) alpha = beta with alpha in the last slot zero.
  LatVec alpha(L_.rank());
  for (int p = k() - 2; p >= 0; --p)
    for (int i = 0; i < d; ++i) alpha.c[p * d + i] = a.base.c[p * d + i] + alpha.c[(p + 1) * d + i];
  const SectionCocycle& s = twisted_;
  const LatVec nalpha = nu_.apply(alpha);
  // phase of alpha * (nu-hat alpha)^{-1}
  const long p = roots_.reduce_phase(-lift_phase(alpha, SectionKind::Twisted) - s.eps(nalpha, -nalpha) +
                                     s.eps(alpha, -nalpha));
  const LatVec S = nu_.slot_sum(alpha);
  const long half_norm = K_.norm(S) / 2;
  return roots_.eta0(-half_norm * roots_.eta_in_eta0() + a.phase - p);
}

Cyc LatticeExtensions::sigma(const LatVec& a) const {
  Cyc result = roots_.scalar(1);
  for (int j = 1; 2 * j < k(); ++j) {
    const long e = L_.inner(nu_.apply(a, j), a);
    if (e == 0) continue;
    result *= (roots_.scalar(1) - roots_.eta(-j)).pow(e);
  }
  if (k() % 2 == 0) {
    const long e = L_.inner(nu_.apply(a, k() / 2), a);
    if (e % 2 != 0) throw std::logic_error("<nu^{k/2} a, a> is odd");
    result *= pow(Rat(2), e / 2);
  }
  return result;
}

std::pair<Cyc, LatVec> LatticeExtensions::induced_action(const LatVec& gamma, const LatVec& mu) const {
  const LatVec mu1 = nu_.embed(mu, 0);
  const LatVec lambda = nu_.slot_sum(gamma) + mu;
  const LatVec lambda1 = nu_.embed(lambda, 0);
  const LatVec beta = gamma + mu1 - lambda1;
  const long t = twisted_.eps(gamma, mu1) - twisted_.eps(lambda1, beta);
  return {tau(CentralElem{beta, roots_.reduce_phase(t)}), lambda};
}

}  // namespace permorb
