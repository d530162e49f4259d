#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace permorb;
using testing_support::A1;
using testing_support::A2;
using testing_support::extensions;

namespace {

std::vector<std::pair<Rat, Rat>> pairs(std::initializer_list<std::pair<Rat, Rat>> xs) { return xs; }

}  // namespace

TEST_CASE("eta powers") {
  const auto e1 = eta_power(1, 2 + rat(1, 24));
  CHECK(e1.terms() == pairs({{rat(1, 24), 1}, {rat(25, 24), -1}, {rat(49, 24), -1}}));
  CHECK(eta_power(0, 5).terms() == pairs({{0, 1}}));
  CHECK(eta_power(24, 3).leading_exponent() == 1);
  // eta^3 = sum (-1)^n (2n+1) q^{(2n+1)^2/8}
  const auto e3 = eta_power(3, rat(81, 8));
  CHECK(e3.terms() == pairs({{rat(1, 8), 1}, {rat(9, 8), -3}, {rat(25, 8), 5}, {rat(49, 8), -7}, {rat(81, 8), 9}}));
}

TEST_CASE("theta series") {
  CHECK(theta_series(A1(), 4).terms() == pairs({{0, 1}, {1, 2}, {4, 2}}));
  CHECK(theta_series(A1(), 6, std::vector<Rat>{0}).terms() == theta_series(A1(), 6).terms());
  const auto sh = theta_series(A1(), 7, std::vector<Rat>{rat(1, 2)});
  CHECK(sh.leading_exponent() == rat(1, 4));
  for (const auto& [e, c] : sh.terms()) CHECK(is_integer(e - rat(1, 4)));
  CHECK_THROWS_WITH(theta_series(A1(), 2, std::vector<Rat>{rat(1, 3)}), doctest::Contains("not in the dual"));
  // A2 has 6 roots and 6 vectors of norm 6
  CHECK(theta_series(A2(), 3).terms() == pairs({{0, 1}, {1, 6}, {3, 6}}));
}

TEST_CASE("series arithmetic") {
  const auto e = eta_power(2, 8);
  const auto one = e * e.inverse();
  CHECK(one.truncated(one.order()).terms() == pairs({{0, 1}}));
  CHECK(one.order() >= 7);
  auto a = FracQSeries::monomial(rat(1, 3), 2, 5);
  a.add_term(rat(1, 2), 1);
  CHECK(a.den() == 6);
  CHECK(a.substitute_power(3).terms() == pairs({{1, 2}, {rat(3, 2), 1}}));
  CHECK(a.shifted(rat(-1, 3)).leading_exponent() == 0);
  CHECK_THROWS(a.coefficient(6));
  CHECK_THROWS(a.agrees_with(a, 6));
}

TEST_CASE("characters") {
  const auto ch = char_voa(A1(), 3 - rat(1, 24));
  CHECK(ch.terms() == pairs({{rat(-1, 24), 1}, {rat(23, 24), 3}, {rat(47, 24), 4}, {rat(71, 24), 7}}));
  for (const auto& [e, c] : char_voa(A2(), 5).terms()) CHECK(is_integer(e + rat(2, 24)));
  CHECK(char_twisted(A1(), 1, 6).terms() == char_voa(A1(), 6).terms());
  CHECK(char_twisted(A1(), 2, 3).leading_exponent() == rat(-1, 48));
  CHECK(char_cycle_type(A1(), {2, 1}, 3).leading_exponent() == rat(-1, 48) - rat(1, 24));
  CHECK(char_cycle_type(A1(), {1, 1}, 4).agrees_with(char_voa(direct_sum_power(A1(), 2), 4), 4));
  CHECK(char_cycle_type(A2(), {3}, 4).agrees_with(char_twisted(A2(), 3, 4), 4));
  CHECK(char_cycle_type(A1(), {2, 1}, 3).agrees_with(char_twisted(A1(), 2, 4) * char_voa(A1(), 4), 3));
}

TEST_CASE("twisted character counts twisted Fock states") {
  for (int k : {2, 3})
    for (const auto& K : {A1(), A2()}) {
      FockSpace VT(extensions(K, k), Sector::Twisted);
      std::map<Rat, long> counts;
      for (const auto& m : VT.basis_up_to(2)) counts[VT.weight(m) - VT.vacuum_weight()]++;
      const Rat shift = rat(K.rank(), 24 * k);
      const auto ch = char_twisted(K, k, 2 - shift);
      std::map<Rat, long> from_series;
      for (const auto& [e, c] : ch.terms()) from_series[e + shift] = to_long(c);
      CHECK(counts == from_series);
    }
}

TEST_CASE("twisted character against the lattice character") {
  const auto r = compare_characters(A1(), 2, 10);
  CHECK(r.report.pass);
  REQUIRE(r.cosets.size() == 1);
  CHECK(r.cosets[0].leading_exponent == rat(1, 4) - rat(1, 24));
  CHECK(compare_characters(A1(), 3, 8).report.pass);
  CHECK(compare_characters(A2(), 2, 6).report.pass);
}
