#include <doctest.h>

#include "cmreg/cohomology.hpp"

using namespace cmreg;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

Polynomial poly(const RingPtr& ring,
                std::vector<std::pair<long, std::vector<std::uint32_t>>> terms) {
  std::vector<Term> ts;
  for (auto& [c, e] : terms) ts.push_back({mono(e), mpq_class(c)});
  return Polynomial::make(ring, std::move(ts));
}

std::vector<Polynomial> twisted_cubic(const RingPtr& R) {
  return {poly(R, {{1, {1, 0, 1, 0}}, {-1, {0, 2, 0, 0}}}),
          poly(R, {{1, {1, 0, 0, 1}}, {-1, {0, 1, 1, 0}}}),
          poly(R, {{1, {0, 1, 0, 1}}, {-1, {0, 0, 2, 0}}})};
}

}  // namespace

TEST_CASE("saturation chain of a plane example") {
  RingPtr R = make_ring(2, Field::rationals(), {"x", "y"});
  MonomialIdeal I = MonomialIdeal::make(R, {mono({2, 0}), mono({1, 1})});
  SaturationChain chain = saturation_chain(I);
  REQUIRE(chain.steps.size() == 2);
  CHECK(chain.steps[0].mj == 2);
  CHECK(chain.steps[0].lengths == std::vector<long long>{0, 1});
  CHECK(chain.steps[0].end == 1);
  CHECK(chain.steps[1].mj == 1);
  CHECK(chain.steps[1].lengths == std::vector<long long>{1});
  CHECK(chain.steps[1].end == 0);
  CHECK(chain.codim == 1);

  CohomologyTable tab = cohomology_table(chain, -3, 3);
  CHECK(tab.dim == 1);
  CHECK(tab.a == std::vector<long>{1, -1});
  CHECK(tab.reg_quotient == 1);
  // h^0 is supported exactly at t = 1.
  CHECK(tab.value(0, 0) == 0);
  CHECK(tab.value(0, 1) == 1);
  CHECK(tab.value(0, 2) == 0);
  // h^1(t) = 1 exactly for t <= -1.
  CHECK(tab.value(1, -1) == 1);
  CHECK(tab.value(1, -7) == 1);
  CHECK(tab.value(1, 0) == 0);

  EulerCheck chk = euler_characteristic_check(I, -5, 5);
  CHECK(chk.ok);
}

TEST_CASE("saturation chain rejects wrong inputs") {
  RingPtr R = make_ring(3, Field::rationals());
  CHECK_THROWS_AS(saturation_chain(MonomialIdeal::make(R, {})), Error);
  CHECK_THROWS_AS(saturation_chain(MonomialIdeal::unit(R)), Error);
  try {
    saturation_chain(MonomialIdeal::make(R, {mono({1, 0, 1})}));
    FAIL("expected hypothesis rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::hypothesis);
  }
}

TEST_CASE("cohomology of a thick curve in four variables") {
  RingPtr R = make_ring(4, Field::rationals());
  MonomialIdeal I = MonomialIdeal::make(
      R, {mono({3, 0, 0, 0}), mono({0, 3, 0, 0}), mono({1, 0, 2, 0}),
          mono({0, 1, 2, 0})});
  SaturationChain chain = saturation_chain(I);
  REQUIRE(chain.steps.size() == 2);
  CHECK(chain.steps[0].mj == 3);
  CHECK(chain.steps[0].lengths ==
        std::vector<long long>{0, 2, 5, 5, 3, 1});
  CHECK(chain.steps[1].mj == 2);
  CHECK(chain.steps[1].lengths == std::vector<long long>{1});
  CHECK(chain.codim == 2);

  CohomologyTable tab = cohomology_table(chain, -5, 8);
  CHECK(tab.dim == 2);
  CHECK(tab.a == std::vector<long>{kMinusInfinity, 4, -2});
  CHECK(tab.reg_quotient == 5);
  CHECK(tab.reg_tail ==
        std::vector<long>{5, 5, 0});
  // h^0 vanishes identically: no generator involves the last variable, so
  // the ideal is saturated.
  for (long t = -5; t <= 8; ++t) CHECK(tab.value(0, t) == 0);
  // h^1 at the top: a_1 = 4, so h^1(4) = l_5 * C(0,0) = 1.
  CHECK(tab.value(1, 4) == 1);
  CHECK(tab.value(1, 5) == 0);

  EulerCheck chk = euler_characteristic_check(I, -6, 8);
  CHECK(chk.ok);

  RegularityResult reg = regularity(I, RegMethod::chain);
  CHECK(reg.reg_quotient == 5);
  CHECK(reg.reg_ideal == 6);
  CHECK(reg.exact);
  CHECK(reg.method == "saturation-chain");
}

TEST_CASE("regularity of a strongly stable ideal by generator degree") {
  RingPtr R = make_ring(4, Field::rationals());
  MonomialIdeal I = MonomialIdeal::make(
      R, {mono({2, 0, 0, 0}), mono({1, 1, 0, 0}), mono({0, 2, 0, 0})});
  RegularityResult by_gens = regularity(I, RegMethod::stable_generators);
  CHECK(by_gens.reg_ideal == 2);
  CHECK(by_gens.reg_quotient == 1);
  RegularityResult by_chain = regularity(I, RegMethod::chain);
  CHECK(by_chain.reg_ideal == 2);
  REQUIRE(by_chain.table.has_value());
  CHECK(by_chain.table->a == std::vector<long>{kMinusInfinity, kMinusInfinity, -1});
  // h^2(-2) = 5 = H(-2) - P(-2) since the other modules vanish.
  CHECK(by_chain.table->value(2, -2) == 5);

  // Requesting the generator-degree route on a non-stable ideal is an error.
  MonomialIdeal bt = MonomialIdeal::make(R, {mono({2, 0, 0, 0}), mono({0, 2, 0, 0})});
  CHECK_THROWS_AS(regularity(bt, RegMethod::stable_generators), Error);
  // But the chain handles it: Borel type suffices.
  CHECK(regularity(bt, RegMethod::chain).reg_ideal == 3);
}

TEST_CASE("regularity of the twisted cubic via generic initial ideal") {
  RingPtr R = make_ring(4, Field::rationals());
  RegularityResult reg =
      regularity(R, twisted_cubic(R), RegMethod::auto_pick, 0, 2);
  CHECK(reg.reg_quotient == 1);
  CHECK(reg.reg_ideal == 2);
  CHECK(!reg.exact);
  CHECK(!reg.upper_bound_only);
  CHECK(reg.method == "generic-initial(grevlex)");
  REQUIRE(reg.reduction_used.has_value());
  CHECK(is_borel_type(*reg.reduction_used));

  // The same computation over GF(32003).
  RingPtr Rp = make_ring(4, Field::prime(32003));
  RegularityResult regp =
      regularity(Rp, twisted_cubic(Rp), RegMethod::auto_pick, 0, 2);
  CHECK(regp.reg_ideal == 2);
}

TEST_CASE("euler check needs borel type") {
  RingPtr R = make_ring(3, Field::rationals());
  CHECK_THROWS_AS(
      euler_characteristic_check(MonomialIdeal::make(R, {mono({1, 0, 1})}), -2, 2),
      Error);
}

TEST_CASE("hyperplane section of the twisted cubic is three points") {
  RingPtr R = make_ring(4, Field::rationals());
  SectionResult sec = hyperplane_section(R, twisted_cubic(R), 11);
  CHECK(sec.ring->nvars == 3);
  HilbertSeries hs = hilbert_series(sec.ring, sec.gens);
  CHECK(hs.dim == 1);              // cone over a zero-dimensional scheme
  CHECK(hs.multiplicity() == 3);   // degree is preserved by a general section
  // Three points on the twisted cubic are never collinear.
  CHECK(hs.function(1) == 3);
  // Determinism in the seed.
  SectionResult again = hyperplane_section(R, twisted_cubic(R), 11);
  CHECK(hilbert_series(again.ring, again.gens) == hs);
}

TEST_CASE("a one-variable chain") {
  RingPtr R = make_ring(1, Field::rationals(), {"x"});
  MonomialIdeal I = MonomialIdeal::make(R, {mono({3})});
  SaturationChain chain = saturation_chain(I);
  REQUIRE(chain.steps.size() == 1);
  CHECK(chain.steps[0].lengths == std::vector<long long>{1, 1, 1});
  CohomologyTable tab = cohomology_table(chain, -2, 4);
  CHECK(tab.dim == 0);
  CHECK(tab.a == std::vector<long>{2});
  CHECK(tab.reg_quotient == 2);  // reg of K[x]/(x^3)
  CHECK(euler_characteristic_check(I, -2, 5).ok);
}
