#include "support.hpp"

#include <doctest.h>

using namespace permorb;
using testing_support::A1;
using testing_support::A2;
using testing_support::basis_states;
using testing_support::extensions;

TEST_CASE("untwisted vertex operators") {
  auto e = extensions(A2(), 2);
  FockSpace VK(e, Sector::UntwistedK);
  const auto vs = basis_states(VK, 2);
  // Y(1, x) = 1
  for (const auto& v : vs)
    for (long n = -3; n <= 2; ++n) {
      const auto got = untwisted_mode(VK, VK.vacuum(), Rat(n), v);
      CHECK(got == (n == -1 ? v : VK.zero()));
    }
  // omega_{n+1} = L(n)
  const auto omega = VK.conformal_vector();
  for (const auto& v : vs)
    for (long n = -2; n <= 2; ++n) CHECK(untwisted_mode(VK, omega, Rat(n + 1), v) == VK.virasoro_L(n, v));
  // skew symmetry-free check: u_{-1} 1 = u
  for (const auto& u : vs) CHECK(untwisted_mode(VK, u, -1, VK.vacuum()) == u);
  CHECK_THROWS_WITH(untwisted_mode(VK, omega, rat(1, 2), VK.vacuum()), doctest::Contains("non-allowed fractional mode"));
}

TEST_CASE("lattice vertex operators carry the cocycle") {
  auto e = extensions(A1(), 2);
  FockSpace VK(e, Sector::UntwistedK);
  const auto ea = VK.ground(LatVec{1}), em = VK.ground(LatVec{-1});
  // Y(e_a, x) e_{-a} = c x^{-2} (1 + a(-1) x + ...) with c the cocycle sign
  const auto top = untwisted_mode(VK, ea, 1, em);
  REQUIRE(top.size() == 1);
  const Cyc c = top.coefficient(FockMono{{}, LatVec{0}});
  CHECK((c == Cyc(1) || c == Cyc(-1)));
  const auto [scalar, label] = VK.group_act(LatVec{1}, LatVec{-1});
  CHECK(c == scalar);
  CHECK(untwisted_mode(VK, ea, 0, em) == c * VK.apply_mode({0, -1}, VK.vacuum()));
  CHECK(untwisted_mode(VK, ea, 2, em).is_zero());
}

TEST_CASE("twisted vertex operators") {
  for (int k : {2, 3}) {
    OrbifoldSpaces s(A1(), k);
    const auto vs = basis_states(s.VT, rat(3, 2));
    // Y^nu(omega, x) at n = 1 is L(0)
    const auto omega = s.VL.conformal_vector();
    for (const auto& v : vs) CHECK(spacetime_twisted_mode(s, omega, 1, v) == s.VT.twisted_L0(v));
    // Y^nu((a(-1)1)^1, x) is the twisted field of (a, 0, ..., 0)
    const auto u = embed_slot(s.VL, s.VK.apply_mode({0, -1}, s.VK.vacuum()), 0);
    AmbVec h(s.ext->L().rank());
    h.c[0] = Cyc(1);
    for (const auto& v : vs)
      for (long num = -2 * k; num <= 2 * k; ++num)
        CHECK(spacetime_twisted_mode(s, u, rat(num, k), v) == s.VT.apply_field(h, num, v));
    CHECK_THROWS(spacetime_twisted_mode(s, omega, rat(1, k + 1), s.VT.vacuum()));
  }
}

TEST_CASE("twisted e_alpha on the vacuum") {
  // k^{-<a,a>/2} x^{(1-k)<a,a>/2k} exp(sum a(-n) x^{n/k} / n) e_a after F
  for (int k : {2, 3}) {
    OrbifoldSpaces s(A1(), k);
    const auto u = embed_slot(s.VL, s.VK.ground(LatVec{1}), 0);
    const Rat lead = rat(1 - k, k);  // (1-k)<a,a>/2k with <a,a> = 2
    // coefficient of x^{lead}: mode n with -n-1 = lead
    const auto got = f_apply(s, spacetime_twisted_mode(s, u, -lead - 1, s.VT.vacuum()));
    CHECK(got == Cyc(rat(1, k)) * s.VK.ground(LatVec{1}));
    // next power x^{lead + 1/k}: a(-1) e_a with the same prefactor
    const auto next = f_apply(s, spacetime_twisted_mode(s, u, -lead - 1 - rat(1, k), s.VT.vacuum()));
    CHECK(next == Cyc(rat(1, k)) * s.VK.apply_mode({0, -1}, s.VK.ground(LatVec{1})));
  }
}

TEST_CASE("worldsheet operators") {
  for (int k : {2, 3}) {
    OrbifoldSpaces s(A1(), k);
    const auto vs = basis_states(s.VK, 2);
    // Y((a(-1)1)^1) = (1/k) x^{1/k - 1} a(x^{1/k}): mode n acts as (1/k) a(kn)
    const auto u = embed_slot(s.VL, s.VK.apply_mode({0, -1}, s.VK.vacuum()), 0);
    for (const auto& v : vs)
      for (long num = -2 * k; num <= 2 * k; ++num)
        CHECK(worldsheet_twisted_mode(s, u, rat(num, k), v) == Cyc(rat(1, k)) * s.VK.apply_mode({0, num}, v));
    for (const auto& v : vs)
      for (long num = -k; num <= k; ++num)
        CHECK(worldsheet_twisted_mode(s, s.VL.vacuum(), rat(num, k), v) == (num == -k ? v : s.VK.zero()));
  }
}
