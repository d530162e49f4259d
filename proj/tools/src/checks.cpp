#include "checks.hpp"

#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace permorb::cli {

namespace {

Report make(const std::string& id, const std::string& anchor, bool pass, const std::string& witness = "") {
  return Report{id, anchor, pass, pass ? "" : witness};
}

std::string clip(const std::string& s) { return s.size() > 200 ? s.substr(0, 200) + "..." : s; }

std::string kstr(int k) { return "k" + std::to_string(k); }

std::vector<StateVector> basis_states(const FockSpace& space, const Rat& excitation) {
  std::vector<StateVector> out;
  for (const auto& m : space.basis_up_to(excitation)) {
    StateVector v(space.sector());
    v.add(m, Cyc(1));
    out.push_back(std::move(v));
  }
  return out;
}

// A nonzero vector of minimal norm.
LatVec shortest_vector(const Lattice& K) {
  for (Rat bound = 1;; bound *= 2) {
    LatVec best;
    for (const auto& a : enumerate_up_to_norm(K, bound))
      if (!a.is_zero() && (best.c.empty() || K.norm(a) < K.norm(best))) best = a;
    if (!best.c.empty()) return best;
  }
}

// alpha(-1) beta(-1) 1 in V_L.
StateVector quadratic_state(const FockSpace& VL, const LatVec& a, const LatVec& b) {
  return VL.apply_field(AmbVec(a), -1, VL.apply_field(AmbVec(b), -1, VL.vacuum()));
}

}  // namespace

std::vector<Report> lemma_suite(int max_m, std::ostream* table) {
  std::vector<Report> out;
  if (table) *table << std::left << std::setw(4) << "m" << std::setw(14) << "sum" << std::setw(14) << "-(m^2-1)/12"
                    << "status\n";
  for (int m = 1; m <= max_m; ++m) {
    const Cyc value = lemma_root_sum(m);
    const Rat expected = -rat(static_cast<long>(m) * m - 1, 12);
    const bool ok = value == Cyc(expected);
    if (table)
      *table << std::setw(4) << m << std::setw(14) << value.to_string() << std::setw(14) << expected.get_str()
             << (ok ? "pass" : "fail") << "\n";
    out.push_back(make("lemma.m" + std::to_string(m), "root sum = -(m^2-1)/12", ok, value.to_string()));
  }
  return out;
}

std::vector<Report> coeff_suite(int k, int series_order, std::ostream* table) {
  std::vector<Report> out;
  const std::string tag = kstr(k);
  RootsOfUnity roots(k);
  const int M = std::max(series_order, 2);
  std::vector<BiSeries> c;
  for (int r = 0; r < k; ++r) c.push_back(c_coeffs(k, r, M));

  bool c00 = true;
  for (int r = 0; r < k; ++r) c00 = c00 && c[r].at(0, 0).is_zero();
  out.push_back(make("coeffs.c00r." + tag, "c_00r = 0", c00));

  const Rat expected = rat(static_cast<long>(k) * k - 1, 24L * k * k);
  out.push_back(make("coeffs.c110-series." + tag, "c_110 = (k^2-1)/24k^2 by series extraction",
                     c[0].at(1, 1) == Cyc(expected), c[0].at(1, 1).to_string()));
  Cyc direct(0);
  for (int j = 1; j < k; ++j) {
    const Cyc w = roots.eta(-j);
    direct += w * ((roots.scalar(1) - w).pow(-2));
  }
  direct *= Cyc(-rat(1, 2L * k * k));
  const Cyc via_lemma = Cyc(-rat(1, 2L * k * k)) * lemma_root_sum(k);
  out.push_back(make("coeffs.c110-closed-form." + tag, "-(1/2k^2) sum eta^-j/(1-eta^-j)^2 via the root-sum lemma",
                     direct == via_lemma && via_lemma == c[0].at(1, 1), direct.to_string() + " vs " + via_lemma.to_string()));

  bool sym = true;
  for (int r = 1; r < k; ++r) {
    Cyc s(0);
    for (int t = 0; t < k; ++t) s += roots.eta(r * t) + roots.eta(-r * t);
    sym = sym && s.is_zero();
  }
  out.push_back(make("coeffs.residue-sum." + tag, "sum_s (eta^rs + eta^-rs) = 0 for r != 0", sym));

  const auto a = a_coeffs(k, series_order);
  out.push_back(make("coeffs.a1." + tag, "a_1 = (1-k)/2", a[0] == rat(1 - k, 2), a[0].get_str()));
  if (series_order >= 2)
    out.push_back(make("coeffs.a2." + tag, "a_2 = (k^2-1)/12", a[1] == rat(static_cast<long>(k) * k - 1, 12), a[1].get_str()));
  const auto sub = a_substitution(a, series_order + 1);
  bool round = true;
  std::string bad;
  for (int e = 0; e <= series_order + 1; ++e) {
    const Rat target = e == 0 ? Rat(0) : binom(Rat(k), e) / k;
    if (sub[e] != target) {
      round = false;
      if (bad.empty()) bad = "degree " + std::to_string(e) + ": " + sub[e].get_str() + " vs " + target.get_str();
    }
  }
  out.push_back(make("coeffs.a-roundtrip." + tag, "exp(-sum a_j x^{j+1} d/dx) x = ((1+x)^k - 1)/k", round, bad));

  if (table) {
    *table << "c_{mnr} for " << tag << ", m + n <= 3\n";
    for (int r = 0; r < k; ++r)
      for (int m = 0; m <= 3; ++m)
        for (int n = 0; m + n <= 3; ++n)
          *table << "  c(" << m << "," << n << "," << r << ") = " << c[r].at(m, n).to_string() << "\n";
    *table << "a_j for " << tag << "\n";
    for (std::size_t j = 0; j < a.size(); ++j) *table << "  a_" << j + 1 << " = " << a[j].get_str() << "\n";
  }
  return out;
}

std::vector<Report> operator_suite(const Lattice& K, int k, std::ostream* table) {
  std::vector<Report> out;
  OrbifoldSpaces s(K, k);
  const std::string tag = (K.name().empty() ? "K" : K.name()) + "." + kstr(k);
  const long d = K.rank();
  const Rat c110 = rat(static_cast<long>(k) * k - 1, 24L * k * k);

  const StateVector omega = s.VL.conformal_vector();
  XPolyOp expected(Sector::UntwistedL);
  expected.add(0, omega);
  expected.add(-2, Cyc(Rat(c110 * k * d)) * s.VL.vacuum());
  const XPolyOp got = exp_delta_apply(s.VL, omega);
  out.push_back(make("ops.exp-delta-omega." + tag, "e^Delta omega = omega + c_110 dim h x^-2", got == expected,
                     clip(got.to_string())));
  if (table) *table << "e^Delta omega = " << got.to_string() << "\n";

  // alpha(-1) beta(-1) 1 against the residue-sum formula.
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> coord(-2, 2);
  bool ok620 = true;
  std::string bad;
  const auto& L = s.ext->L();
  std::vector<BiSeries> c;
  for (int r = 0; r < k; ++r) c.push_back(c_coeffs(k, r, 2));
  for (int trial = 0; trial < 6 && ok620; ++trial) {
    LatVec a(L.rank()), b(L.rank());
    for (auto& x : a.c) x = coord(rng);
    for (auto& x : b.c) x = coord(rng);
    Cyc scalar = Cyc(2 * c110 * L.inner(a, b));
    for (int r = 1; r < k; ++r)
      for (int t = 0; t < k; ++t) {
        const AmbVec as = eigenprojection(s.ext->nu(), s.ext->roots(), AmbVec(a), t);
        const AmbVec bs = eigenprojection(s.ext->nu(), s.ext->roots(), AmbVec(b), -t);
        scalar += c[r].at(1, 1) * (s.ext->roots().eta(r * t) + s.ext->roots().eta(-r * t)) * L.inner(as, bs);
      }
    const StateVector v = quadratic_state(s.VL, a, b);
    XPolyOp want(Sector::UntwistedL);
    want.add(0, v);
    want.add(-2, scalar * s.VL.vacuum());
    const XPolyOp have = exp_delta_apply(s.VL, v);
    if (!(have == want)) {
      ok620 = false;
      bad = "alpha=" + a.to_string() + " beta=" + b.to_string() + " got " + clip(have.to_string());
    }
  }
  out.push_back(make("ops.exp-delta-quadratic." + tag, "e^Delta alpha(-1)beta(-1)1 residue-sum formula", ok620, bad));

  const StateVector omK = s.VK.conformal_vector();
  XPolyOp efw(Sector::UntwistedK);
  efw.add(2L * k - 2, Cyc(Rat(static_cast<long>(k) * k)) * omK);
  efw.add(-2, Cyc(-rat((static_cast<long>(k) * k - 1) * d, 24)) * s.VK.vacuum());
  const XPolyOp ef = ef_inverse_apply(s.VK, omK);
  out.push_back(make("ops.ef-inverse-omega." + tag, "E_f^-1 omega_K = x^{2k-2} k^2 omega_K - (k^2-1)d/24 x^-2",
                     ef == efw, clip(ef.to_string())));
  if (table) *table << "E_f^-1 omega_K = " << ef.to_string() << "\n";

  bool round = true;
  std::string rbad;
  for (const auto& v : basis_states(s.VK, 3)) {
    XPolyOp id(Sector::UntwistedK);
    id.add(0, v);
    const XPolyOp back = ef_inverse_apply(s.VK, ef_apply(s.VK, v));
    if (!(back == id)) {
      round = false;
      rbad = v.to_string();
      break;
    }
  }
  out.push_back(make("ops.ef-roundtrip." + tag, "E_f^-1 E_f = 1 up to weight 3", round, rbad));
  return out;
}

std::vector<Report> cocycle_suite(const Lattice& K, int k) {
  std::vector<Report> out;
  LatticeExtensions ext(K, k);
  const std::string tag = (K.name().empty() ? "K" : K.name()) + "." + kstr(k);
  const int n = ext.L().rank();

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3);
  bool diag = true;
  for (int t = 0; t < 50; ++t) {
    LatVec a(n);
    for (auto& x : a.c) x = coord(rng);
    diag = diag && ext.c_exponent(a, a) == 0;
  }
  out.push_back(make("cocycle.C-diagonal." + tag, "C(alpha, alpha) = 1 on 50 samples", diag));

  bool radical = true;
  const auto N = ext.N_generators();
  for (const auto& a : N)
    for (const auto& b : N) radical = radical && ext.c_exponent(a, b) == 0;
  out.push_back(make("cocycle.C-trivial-on-N." + tag, "C = 1 on N x N", radical));

  auto rows = [](const std::vector<LatVec>& vs) {
    IntMatrix m;
    for (const auto& v : vs) m.push_back(v.c);
    return m;
  };
  const bool eq = hermite_normal_form(rows(N)) == hermite_normal_form(rows(ext.M_generators()));
  out.push_back(make("cocycle.N-equals-M." + tag, "N = (1 - nu) L", eq));

  bool period = true;
  for (auto kind : {SectionKind::Untwisted, SectionKind::Twisted})
    for (int i = 0; i < n; ++i) {
      const CentralElem e{LatVec::unit(n, i), 0};
      period = period && ext.nu_hat(e, kind, k) == e;
    }
  out.push_back(make("cocycle.nu-hat-period." + tag, "nu-hat^k = 1 on basis", period));

  bool comm = true;
  std::string bad;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CentralElem a{LatVec::unit(n, i), 0}, b{LatVec::unit(n, j), 0};
      const CentralElem ct = ext.commutator(a, b, SectionKind::Twisted);
      const CentralElem cu = ext.commutator(a, b, SectionKind::Untwisted);
      if (!ct.base.is_zero() || ct.phase != ext.c_exponent(a.base, b.base) || !cu.base.is_zero() ||
          cu.phase != ext.c0_exponent(a.base, b.base)) {
        comm = false;
        if (bad.empty()) bad = "basis pair " + std::to_string(i) + "," + std::to_string(j);
      }
    }
  out.push_back(make("cocycle.commutators." + tag, "group commutators give C and C_0", comm, bad));
  return out;
}

std::vector<Report> virasoro_suite(const Lattice& K, const Rat& weight_cutoff) {
  std::vector<Report> out;
  auto ext = std::make_shared<const LatticeExtensions>(K, 2);
  FockSpace VK(ext, Sector::UntwistedK);
  const std::string tag = K.name().empty() ? "K" : K.name();
  const auto basis = basis_states(VK, weight_cutoff);
  const long d = K.rank();
  bool ok = true;
  std::string bad;
  for (long m = -2; m <= 2 && ok; ++m)
    for (long n = -2; n <= 2 && ok; ++n)
      for (const auto& v : basis) {
        StateVector lhs = VK.virasoro_L(m, VK.virasoro_L(n, v)) - VK.virasoro_L(n, VK.virasoro_L(m, v));
        StateVector rhs = Cyc(Rat(m - n)) * VK.virasoro_L(m + n, v);
        if (m + n == 0) rhs += Cyc(rat((m * m * m - m) * d, 12)) * v;
        if (lhs != rhs) {
          ok = false;
          bad = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " v=" + v.to_string();
          break;
        }
      }
  out.push_back(make("virasoro.bracket." + tag, "[L(m),L(n)] = (m-n)L(m+n) + (m^3-m)/12 c, c = rank", ok, bad));

  bool modes = true;
  const StateVector omega = VK.conformal_vector();
  for (long n = -2; n <= 2 && modes; ++n)
    for (const auto& v : basis)
      if (untwisted_mode(VK, omega, Rat(n + 1), v) != VK.virasoro_L(n, v)) {
        modes = false;
        bad = "n=" + std::to_string(n) + " v=" + v.to_string();
        break;
      }
  out.push_back(make("virasoro.omega-modes." + tag, "omega_{n+1} = L(n)", modes, bad));
  return out;
}

std::vector<Report> character_suite(const Lattice& K, int k, const Rat& q_order, const Rat& weight_cutoff,
                                    std::ostream* table) {
  std::vector<Report> out;
  const std::string tag = (K.name().empty() ? "K" : K.name()) + "." + kstr(k);
  const long d = K.rank();
  const FracQSeries voa = char_voa(K, q_order);
  const FracQSeries tw = char_twisted(K, k, q_order);
  const FracQSeries vl = char_cycle_type(K, std::vector<int>(k, 1), q_order);
  if (table) {
    *table << "char V_K      = " << voa.to_string() << "\n";
    *table << "char V_L      = " << vl.to_string() << "\n";
    *table << "char V_L^T    = " << tw.to_string() << "\n";
    *table << "char V_L^T(q^k) = " << char_twisted(K, k, q_order / k).substitute_power(k).to_string() << "\n";
  }
  const FracQSeries direct = char_voa(direct_sum_power(K, k), q_order);
  out.push_back(make("chars.identity-cycles." + tag, "cycle type 1^k gives char V_L", vl.agrees_with(direct, q_order)));
  out.push_back(make("chars.single-cycle." + tag, "cycle type (k) gives char V_L^T",
                     char_cycle_type(K, {k}, q_order).agrees_with(tw, q_order)));
  bool integral = true;
  for (const auto& [e, c] : tw.terms()) integral = integral && is_integer(c) && c > 0;
  out.push_back(make("chars.twisted-integral." + tag, "twisted coefficients are positive integers", integral));
  out.push_back(make("chars.twisted-lead." + tag, "twisted leading exponent -d/24k",
                     tw.leading_exponent() == -rat(d, 24L * k), tw.leading_exponent().get_str()));

  // State counting in the twisted Fock space.
  FockSpace VT(std::make_shared<const LatticeExtensions>(K, k), Sector::Twisted);
  const Rat cutoff = std::min(weight_cutoff, q_order);
  std::map<Rat, long> counts;
  for (const auto& m : VT.basis_up_to(cutoff)) counts[VT.weight(m) - VT.vacuum_weight()] += 1;
  const FracQSeries tc = char_twisted(K, k, cutoff - rat(d, 24L * k));
  bool count_ok = true;
  std::string bad;
  for (const auto& [e, c] : tc.terms()) {
    const Rat w = e + rat(d, 24L * k);
    if (counts[w] != c) {
      count_ok = false;
      if (bad.empty()) bad = "weight " + w.get_str() + ": " + std::to_string(counts[w]) + " states vs " + c.get_str();
    }
  }
  for (const auto& [w, n] : counts)
    if (tc.coefficient(w - rat(d, 24L * k)) != n) count_ok = false;
  out.push_back(make("chars.state-count." + tag, "twisted Fock states by weight match char V_L^T", count_ok, bad));
  return out;
}

std::vector<Report> identity_suite(const Lattice& K, int k, const Rat& q_order, std::ostream* table) {
  std::vector<Report> out;
  const std::string tag = (K.name().empty() ? "K" : K.name()) + "." + kstr(k);
  const CharacterComparison r = compare_characters(K, k, q_order);
  if (table) {
    *table << std::left << std::setw(12) << "exponent" << std::setw(16) << "V_L^T(q^k)" << "V_K\n";
    std::map<Rat, std::pair<Rat, Rat>> rows;
    for (const auto& [e, c] : r.twisted_substituted.truncated(q_order).terms()) rows[e].first = c;
    for (const auto& [e, c] : r.voa.terms()) rows[e].second = c;
    for (const auto& [e, p] : rows)
      *table << std::setw(12) << e.get_str() << std::setw(16) << p.first.get_str() << p.second.get_str() << "\n";
    for (const auto& c : r.cosets) {
      *table << "coset (";
      for (std::size_t i = 0; i < c.beta.size(); ++i) *table << (i ? ", " : "") << c.beta[i].get_str();
      *table << ") + K: leading exponent " << c.leading_exponent.get_str() << ", min norm " << c.min_norm.get_str()
             << "\n";
    }
  }
  Report main = r.report;
  main.id = "identity.series." + tag;
  // The coset part of the result is reported separately below.
  const auto a = r.twisted_substituted.truncated(q_order).terms();
  const auto b = r.voa.terms();
  main.pass = a == b;
  if (main.pass) main.witness.clear();
  out.push_back(main);
  const Rat voa_lead = -rat(K.rank(), 24);
  for (std::size_t i = 0; i < r.cosets.size(); ++i) {
    const auto& c = r.cosets[i];
    const bool ok = c.leading_exponent != voa_lead && c.leading_exponent - voa_lead == c.min_norm / 2;
    out.push_back(make("identity.coset" + std::to_string(i + 1) + "." + tag, "nonzero coset excluded by leading exponent",
                       ok, c.leading_exponent.get_str()));
  }
  return out;
}

std::vector<Report> l0_suite(const Lattice& K, int k, const Rat& weight_cutoff) {
  std::vector<Report> out;
  OrbifoldSpaces s(K, k);
  const std::string tag = (K.name().empty() ? "K" : K.name()) + "." + kstr(k);
  const long d = K.rank();
  out.push_back(make("l0.vacuum-weight." + tag, "twisted vacuum weight (k^2-1)d/24k",
                     s.VT.weight(s.VT.vacuum()) == rat((static_cast<long>(k) * k - 1) * d, 24L * k)));
  long sum = 0;
  for (long j = 1; j < k; ++j) sum += j * (k - j);
  out.push_back(make("l0.weight-identity." + tag, "sum j(k-j) = k(k^2-1)/6", 6 * sum == static_cast<long>(k) * (k * k - 1)));

  // L_K(0) from Y^nu((E_f(x)^-1 omega_K)^1, x^k) at x^-2.
  const XPolyOp ef = ef_inverse_apply(s.VK, s.VK.conformal_vector());
  bool ok = true;
  std::string bad;
  for (const auto& v : basis_states(s.VT, weight_cutoff)) {
    StateVector lhs(Sector::Twisted);
    for (const auto& [e, w] : ef.terms())
      lhs += spacetime_twisted_mode(s, embed_slot(s.VL, w, 0), (e + 2) / k - 1, v);
    StateVector rhs = Cyc(Rat(k)) * s.VT.twisted_L0(v) - Cyc(rat((static_cast<long>(k) * k - 1) * d, 24)) * v;
    if (lhs != rhs) {
      ok = false;
      bad = "v=" + v.to_string() + " lhs=" + clip(lhs.to_string());
      break;
    }
  }
  out.push_back(make("l0.relation." + tag, "L_K(0) = k L(0) - (k^2-1)d/24 on V_L^T", ok, bad));
  return out;
}

std::vector<Report> iso_suite(const Lattice& K, int k, const Rat& weight_cutoff, const Rat& mode_bound) {
  std::vector<Report> out;
  OrbifoldSpaces s(K, k);
  const std::string tag = (K.name().empty() ? "K" : K.name()) + "." + kstr(k);
  const int d = K.rank();
  const auto vs = basis_states(s.VT, weight_cutoff);

  bool bij = true;
  for (const auto& v : basis_states(s.VT, weight_cutoff)) {
    const StateVector fv = f_apply(s, v);
    bij = bij && f_inverse_apply(s, fv) == v &&
          s.VK.weight(fv) == k * s.VT.weight(v) - rat((static_cast<long>(k) * k - 1) * d, 24);
  }
  out.push_back(make("iso.bijection." + tag, "F^-1 F = 1 and wt F(v) = k wt v - (k^2-1)d/24", bij));

  std::vector<Rat> modes;
  const long top = floor(mode_bound * k).get_si();
  for (long u = -top; u <= top; ++u) modes.push_back(rat(u, k));

  const LatVec zero(d);
  const LatVec alpha = shortest_vector(K);
  std::vector<std::pair<std::string, StateVector>> gens;
  for (int p = 0; p < k; ++p)
    gens.emplace_back("alpha(-1)-slot" + std::to_string(p),
                      embed_slot(s.VL, s.VK.apply_field(AmbVec(alpha), -1, s.VK.vacuum()), p));
  gens.emplace_back("omega", s.VL.conformal_vector());
  gens.emplace_back("e_alpha", embed_slot(s.VL, s.VK.ground(alpha), 0));
  gens.emplace_back("e_-alpha", embed_slot(s.VL, s.VK.ground(-alpha), 0));
  for (const auto& [name, u] : gens) {
    Report r = intertwine_check(s, u, vs, modes);
    r.id = "iso.intertwine." + name + "." + tag;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace permorb::cli
