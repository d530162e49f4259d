#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace permorb;
using testing_support::A1;
using testing_support::A2;

namespace {

// prod_{j=0}^{k-1} (-eta^j)^{<nu^j a, b>}, term by term.
Cyc commutator_by_product(const LatticeExtensions& e, const LatVec& a, const LatVec& b) {
  Cyc c(1);
  for (int j = 0; j < e.k(); ++j) {
    const long p = e.L().inner(e.nu().apply(a, j), b);
    c *= (Cyc(-1) * e.roots().eta(j)).pow(p);
  }
  return c;
}

LatVec sample(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<int> coord(-3, 3);
  LatVec v(rank);
  for (auto& x : v.c) x = coord(rng);
  return v;
}

}  // namespace

TEST_CASE("commutator maps: examples") {
  LatticeExtensions a1x2(A1(), 2);
  CHECK(a1x2.commutator_C0(LatVec{1, 0}, LatVec{1, 0}) == Cyc(1));
  CHECK(a1x2.commutator_C(LatVec{1, 0}, LatVec{0, 1}) == Cyc(1));
  LatticeExtensions a2(A2(), 1);
  CHECK(a2.commutator_C0(LatVec{1, 0}, LatVec{0, 1}) == Cyc(-1));
  CHECK(a2.commutator_C0(LatVec{1, 0}, LatVec{0, 0}) == Cyc(1));
}

TEST_CASE("commutator maps: properties") {
  std::mt19937 rng(11);
  for (const auto& K : {A1(), A2()})
    for (int k = 1; k <= 4; ++k) {
      LatticeExtensions e(K, k);
      const int n = e.L().rank();
      for (int t = 0; t < 20; ++t) {
        const LatVec a = sample(rng, n), b = sample(rng, n), c = sample(rng, n);
        CHECK(e.commutator_C(a, b) == commutator_by_product(e, a, b));
        CHECK(e.commutator_C(a, a) == Cyc(1));
        CHECK(e.commutator_C0(a, a) == Cyc(1));
        CHECK(e.commutator_C(a, b) * e.commutator_C(b, a) == Cyc(1));
        CHECK(e.commutator_C(e.nu().apply(a), e.nu().apply(b)) == e.commutator_C(a, b));
        CHECK(e.commutator_C(a + c, b) == e.commutator_C(a, b) * e.commutator_C(c, b));
      }
    }
}

TEST_CASE("group law and sections") {
  std::mt19937 rng(5);
  for (int k : {2, 3, 4}) {
    LatticeExtensions e(A2(), k);
    const int n = e.L().rank();
    for (int t = 0; t < 20; ++t) {
      const CentralElem a{sample(rng, n), static_cast<long>(t % 3)}, b{sample(rng, n), 1};
      for (auto kind : {SectionKind::Untwisted, SectionKind::Twisted}) {
        CHECK(e.mul(a, e.inverse(a, kind), kind) == e.central(0));
        const CentralElem c = e.commutator(a, b, kind);
        CHECK(c.base.is_zero());
        const long want = kind == SectionKind::Untwisted ? e.c0_exponent(a.base, b.base) : e.c_exponent(a.base, b.base);
        CHECK(c.phase == want);
      }
      // the two products differ by the identification scalar
      const long diff = e.mul(a, b, SectionKind::Untwisted).phase - e.mul(a, b, SectionKind::Twisted).phase;
      CHECK(e.roots().eta0(diff) == e.roots().eta0(e.identification_exponent(a.base, b.base)));
    }
  }
}

TEST_CASE("lift of the isometry") {
  std::mt19937 rng(3);
  for (int k : {2, 3, 4, 5}) {
    LatticeExtensions e(A2(), k);
    const int n = e.L().rank();
    const CentralElem diag{e.nu().diagonal(LatVec{1, -1}), e.roots().reduce_phase(2)};
    CHECK(e.nu_hat(diag, SectionKind::Twisted) == diag);
    for (int t = 0; t < 10; ++t) {
      const CentralElem a{sample(rng, n), t};
      const CentralElem a0{a.base, e.roots().reduce_phase(a.phase)};
      for (auto kind : {SectionKind::Untwisted, SectionKind::Twisted}) {
        CHECK(e.nu_hat(a0, kind, k) == a0);
        CHECK(e.nu_hat(a0, kind).base == e.nu().apply(a0.base));
        const CentralElem shifted = e.mul(e.central(1), a0, kind);
        CHECK(e.nu_hat(shifted, kind) == e.mul(e.central(1), e.nu_hat(a0, kind), kind));
        // automorphism
        const CentralElem b{sample(rng, n), 0};
        CHECK(e.nu_hat(e.mul(a0, b, kind), kind) == e.mul(e.nu_hat(a0, kind), e.nu_hat(b, kind), kind));
      }
    }
  }
}

TEST_CASE("radical, tau and sigma") {
  std::mt19937 rng(9);
  for (int k : {2, 3, 4}) {
    LatticeExtensions e(A2(), k);
    const auto N = e.N_generators();
    for (const auto& a : N)
      for (const auto& b : N) CHECK(e.commutator_C(a, b) == Cyc(1));
    CHECK(e.tau(e.central(1)) == e.roots().eta0(1));
    CHECK(e.tau(e.central(0)) == Cyc(1));
    CHECK_THROWS_AS(e.tau(CentralElem{LatVec::unit(e.L().rank(), 0), 0}), std::invalid_argument);
    // tau(a nu-hat(a)^-1) = eta^{-<S, S>/2}, S the slot sum of a
    for (int t = 0; t < 10; ++t) {
      const CentralElem a{sample(rng, e.L().rank()), 0};
      const CentralElem b = e.mul(a, e.inverse(e.nu_hat(a, SectionKind::Twisted), SectionKind::Twisted), SectionKind::Twisted);
      const LatVec S = e.nu().slot_sum(a.base);
      CHECK(e.tau(b) == e.roots().eta(-e.K().norm(S) / 2));
    }
  }
  CHECK(LatticeExtensions(A1(), 1).sigma(LatVec{1}) == Cyc(1));
  LatticeExtensions e2(A1(), 2);
  CHECK(e2.sigma(LatVec{1, 0}) == Cyc(1));
  CHECK(e2.sigma(LatVec{1, 1}) == Cyc(4));
}
