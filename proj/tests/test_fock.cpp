#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace permorb;
using testing_support::A1;
using testing_support::A2;
using testing_support::basis_states;
using testing_support::extensions;

TEST_CASE("Heisenberg relations") {
  auto e = extensions(A1(), 2);
  FockSpace VK(e, Sector::UntwistedK), VT(e, Sector::Twisted);
  const auto one = VK.vacuum();
  // b(1) b(-1) 1 = <b, b> 1 in V_K
  CHECK(VK.apply_mode({0, 1}, VK.apply_mode({0, -1}, one)) == Cyc(2) * one);
  // zero mode on a ground state
  const AmbVec a(LatVec{1});
  CHECK(VK.apply_field(a, 0, VK.ground(LatVec{3})) == Cyc(6) * VK.ground(LatVec{3}));
  // twisted [h(1/k), h(-1/k)] = (1/k) <h_(1), h_(-1)>; b in slot 0 has <b_(r), b_(-r)> = <b,b>/k
  const auto t = VT.apply_mode({0, 1}, VT.apply_mode({0, -1}, VT.vacuum()));
  CHECK(t == Cyc(rat(1, 2)) * Cyc(rat(2, 2)) * VT.vacuum());
}

TEST_CASE("commutator of twisted modes on sampled states") {
  for (int k : {2, 3}) {
    auto e = extensions(A2(), k);
    FockSpace VT(e, Sector::Twisted);
    const int n = e->L().rank();
    for (const auto& v : basis_states(VT, 1)) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (long a = -2; a <= 2; ++a) {
            const AmbVec h = AmbVec(LatVec::unit(n, i)), g = AmbVec(LatVec::unit(n, j));
            const StateVector lhs = VT.apply_field(h, a, VT.apply_field(g, -a, v)) - VT.apply_field(g, -a, VT.apply_field(h, a, v));
            // [h(m), g(-m)] = m <h_(km), g_(-km)>: projections onto the matching eigenspaces
            const AmbVec hp = eigenprojection(e->nu(), e->roots(), h, a);
            const AmbVec gp = eigenprojection(e->nu(), e->roots(), g, -a);
            const Cyc want = Cyc(rat(a, k)) * e->L().inner(hp, gp);
            CHECK(lhs == want * v);
          }
    }
  }
}

TEST_CASE("weights") {
  auto e3 = extensions(A1(), 3);
  CHECK(FockSpace(e3, Sector::Twisted).vacuum_weight() == rat(1, 9));
  auto e2 = extensions(A1(), 2);
  FockSpace VK(e2, Sector::UntwistedK), VT(e2, Sector::Twisted);
  CHECK(VK.weight(VK.ground(LatVec{1})) == 1);
  CHECK(VT.weight(VT.apply_mode({0, -1}, VT.vacuum())) == rat(9, 16));
  CHECK_THROWS(VK.weight(VK.vacuum() + VK.ground(LatVec{1})));
}

TEST_CASE("basis enumeration is complete and sorted") {
  auto e = extensions(A1(), 2);
  FockSpace VT(e, Sector::Twisted);
  const auto b = VT.basis_up_to(2);
  for (std::size_t i = 1; i < b.size(); ++i) CHECK(VT.weight(b[i - 1]) <= VT.weight(b[i]));
  // counts by weight for A1, k = 2: partitions into half-integer parts times theta with norms/2k
  std::map<Rat, int> count;
  for (const auto& m : b) count[VT.weight(m) - VT.vacuum_weight()]++;
  CHECK(count[0] == 1);
  CHECK(count[rat(1, 2)] == 3);  // b(-1/2), e^{+-alpha}
  CHECK(count[1] == 4);          // b(-1), b(-1/2)^2, b(-1/2) e^{+-alpha}
}

TEST_CASE("Virasoro operators on V_K") {
  auto e = extensions(A2(), 2);
  FockSpace VK(e, Sector::UntwistedK);
  const auto omega = VK.conformal_vector();
  CHECK(VK.virasoro_L(2, omega) == Cyc(1) * VK.vacuum());  // d/2 with d = 2
  CHECK(VK.virasoro_L(0, omega) == Cyc(2) * omega);
  const auto ea = VK.ground(LatVec{1, 0});
  CHECK(VK.virasoro_L(0, ea) == Cyc(1) * ea);
  for (long j = 1; j <= 3; ++j) CHECK(VK.virasoro_L(j, ea).is_zero());
  CHECK(VK.virasoro_L(-1, VK.vacuum()).is_zero());
}

TEST_CASE("twisted L(0) is the grading") {
  for (int k : {2, 3}) {
    auto e = extensions(A2(), k);
    FockSpace VT(e, Sector::Twisted);
    const Rat vac = rat((k * k - 1) * 2, 24 * k);
    CHECK(VT.twisted_L0(VT.vacuum()) == Cyc(vac) * VT.vacuum());
    const LatVec alpha{1, 1};
    CHECK(VT.twisted_L0(VT.ground(alpha)) == Cyc(rat(6, 2 * k) + vac) * VT.ground(alpha));
    for (const auto& v : basis_states(VT, rat(3, 2))) {
      CHECK(VT.twisted_L0(v) == Cyc(VT.weight(v)) * v);
      // [L(0), h(m)] = -m h(m)
      for (long m = -2; m <= 2; ++m) {
        const AmbVec h(LatVec::unit(e->L().rank(), 1));
        const auto hv = VT.apply_field(h, m, v);
        const auto lhs = VT.twisted_L0(hv) - VT.apply_field(h, m, VT.twisted_L0(v));
        CHECK(lhs == Cyc(rat(-m, k)) * hv);
      }
    }
  }
}

TEST_CASE("slot embedding and rotation") {
  auto e = extensions(A1(), 3);
  FockSpace VK(e, Sector::UntwistedK), VL(e, Sector::UntwistedL);
  const auto s = VK.apply_mode({0, -2}, VK.ground(LatVec{1}));
  for (int p = 0; p < 3; ++p) {
    const auto u = embed_slot(VL, s, p);
    REQUIRE(u.size() == 1);
    CHECK(slot_of(VL, u.terms().begin()->first) == p);
    CHECK(extract_slot(VK, VL, u.terms().begin()->first, p) == s);
    CHECK(VL.rotate(u, 3) == u);
  }
  CHECK(VL.rotate(embed_slot(VL, s, 0), -1) == embed_slot(VL, s, 1));
  CHECK(slot_of(VL, VL.vacuum().terms().begin()->first) == -1);
}

TEST_CASE("sector mismatches throw") {
  auto e = extensions(A1(), 2);
  FockSpace VK(e, Sector::UntwistedK), VT(e, Sector::Twisted);
  CHECK_THROWS(VK.apply_mode({0, -1}, VT.vacuum()));
  CHECK_THROWS(VK.vacuum() + VT.vacuum());
}
