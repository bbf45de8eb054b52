#include <doctest.h>

#include "cmreg/groebner.hpp"

using namespace cmreg;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

Polynomial poly(const RingPtr& ring,
                std::vector<std::pair<long, std::vector<std::uint32_t>>> terms) {
  std::vector<Term> ts;
  for (auto& [c, e] : terms) ts.push_back({mono(e), mpq_class(c)});
  return Polynomial::make(ring, std::move(ts));
}

// Homogeneous ideal of the standard rational normal curve of degree 3.
std::vector<Polynomial> twisted_cubic(const RingPtr& R) {
  return {poly(R, {{1, {1, 0, 1, 0}}, {-1, {0, 2, 0, 0}}}),   // x1*x3 - x2^2
          poly(R, {{1, {1, 0, 0, 1}}, {-1, {0, 1, 1, 0}}}),   // x1*x4 - x2*x3
          poly(R, {{1, {0, 1, 0, 1}}, {-1, {0, 0, 2, 0}}})};  // x2*x4 - x3^2
}

}  // namespace

TEST_CASE("buchberger on the twisted cubic") {
  RingPtr R = make_ring(4, Field::rationals());
  GroebnerBasis gb = buchberger(R, twisted_cubic(R), TermOrder::grevlex());
  CHECK(gb.basis().size() == 3);  // the quadrics are already a basis
  CHECK(!gb.is_zero_ideal());
  CHECK(!gb.is_unit_ideal());

  // Cubic membership: x2^3 - x1^2*x4 vanishes on (s^3, s^2 t, s t^2, t^3).
  Polynomial member =
      poly(R, {{1, {0, 3, 0, 0}}, {-1, {2, 0, 0, 1}}});
  CHECK(normal_form(member, gb).is_zero());
  CHECK(ideal_contains(gb, member));
  Polynomial nonmember = poly(R, {{1, {0, 2, 0, 0}}});
  CHECK(!ideal_contains(gb, nonmember));

  // Leading terms in grevlex: x2^2, x2*x3, x3^2 (variables 2 and 3 are the
  // middle ones).
  MonomialIdeal in = initial_ideal(gb);
  CHECK(in == MonomialIdeal::make(R, {mono({0, 2, 0, 0}), mono({0, 1, 1, 0}),
                                      mono({0, 0, 2, 0})}));
}

TEST_CASE("buchberger edge cases") {
  RingPtr R = make_ring(2, Field::rationals());
  CHECK(buchberger(R, {}, TermOrder::grevlex()).is_zero_ideal());
  CHECK(buchberger(R, {Polynomial::zero(R)}, TermOrder::grevlex()).is_zero_ideal());
  CHECK(buchberger(R, {Polynomial::constant(R, mpq_class(5))}, TermOrder::grevlex())
            .is_unit_ideal());

  // Inconsistent affine system collapses to (1).
  Polynomial x = Polynomial::variable(R, 0);
  Polynomial one = Polynomial::constant(R, 1);
  GroebnerBasis gb = buchberger(R, {x, x - one}, TermOrder::lex());
  CHECK(gb.is_unit_ideal());
}

TEST_CASE("reduced basis is canonical") {
  RingPtr R = make_ring(4, Field::rationals());
  auto gens = twisted_cubic(R);
  GroebnerBasis a = buchberger(R, gens, TermOrder::grevlex());
  std::reverse(gens.begin(), gens.end());
  gens.push_back(gens[0].scaled(mpq_class(7, 3)));
  GroebnerBasis b = buchberger(R, gens, TermOrder::grevlex());
  REQUIRE(a.basis().size() == b.basis().size());
  for (size_t i = 0; i < a.basis().size(); ++i)
    CHECK(a.basis()[i] == b.basis()[i]);
  CHECK(same_ideal(a, b));
}

TEST_CASE("groebner over a prime field is monic") {
  RingPtr R = make_ring(4, Field::prime(32003));
  GroebnerBasis gb = buchberger(R, twisted_cubic(R), TermOrder::grevlex());
  CHECK(gb.basis().size() == 3);
  for (const auto& g : gb.basis())
    CHECK(g.leading_term(TermOrder::grevlex()).c == mpq_class(1));
}

TEST_CASE("degree budget is a hard error") {
  RingPtr R = make_ring(4, Field::rationals());
  GBOptions opts;
  opts.budget_degree = 1;
  try {
    buchberger(R, twisted_cubic(R), TermOrder::grevlex(), opts);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget);
  }
}

TEST_CASE("elimination finds the plane curve") {
  // x = t^2, y = t^3: eliminating t from (t^2 - x, t^3 - y) leaves y^2 - x^3.
  RingPtr R = make_ring(3, Field::rationals(), {"t", "x", "y"});
  Polynomial f = poly(R, {{1, {2, 0, 0}}, {-1, {0, 1, 0}}});
  Polynomial g = poly(R, {{1, {3, 0, 0}}, {-1, {0, 0, 1}}});
  auto elim = eliminate_first(R, {f, g}, 1);
  REQUIRE(elim.size() == 1);
  Polynomial expect =
      poly(R, {{1, {0, 3, 0}}, {-1, {0, 0, 2}}}).normalized(TermOrder::grevlex());
  CHECK(elim[0].normalized(TermOrder::grevlex()) == expect);
}

TEST_CASE("ideal intersection and colon") {
  RingPtr R = make_ring(2, Field::rationals(), {"x", "y"});
  Polynomial x = Polynomial::variable(R, 0);
  Polynomial y = Polynomial::variable(R, 1);

  auto inter = intersect_ideals(R, {x}, {y});
  GroebnerBasis gi = buchberger(R, inter, TermOrder::grevlex());
  GroebnerBasis expect = buchberger(R, {x * y}, TermOrder::grevlex());
  CHECK(same_ideal(gi, expect));

  auto quot = colon_by_poly(R, {x * y}, x);
  CHECK(same_ideal(buchberger(R, quot, TermOrder::grevlex()),
                   buchberger(R, {y}, TermOrder::grevlex())));
}

TEST_CASE("saturation by a polynomial and by the maximal ideal") {
  RingPtr R = make_ring(2, Field::rationals(), {"x", "y"});
  Polynomial x = Polynomial::variable(R, 0);
  Polynomial y = Polynomial::variable(R, 1);
  // (x^2 y, x y^2) : y^infty = (x).
  auto sat = saturate_by_poly(R, {x * x * y, x * y * y}, y);
  CHECK(same_ideal(buchberger(R, sat, TermOrder::grevlex()),
                   buchberger(R, {x}, TermOrder::grevlex())));

  // (x^2, xy) : (x,y)^infty = (x).
  auto msat = m_saturate_ideal(R, {x * x, x * y}, 7);
  CHECK(same_ideal(buchberger(R, msat, TermOrder::grevlex()),
                   buchberger(R, {x}, TermOrder::grevlex())));
}

TEST_CASE("exact polynomial division") {
  RingPtr R = make_ring(2, Field::rationals(), {"x", "y"});
  Polynomial x = Polynomial::variable(R, 0);
  Polynomial y = Polynomial::variable(R, 1);
  Polynomial f = (x + y) * (x - y);
  CHECK(exact_divide(f, x + y) == x - y);
  CHECK_THROWS_AS(exact_divide(f, x * y), Error);
}

TEST_CASE("generic initial ideal of the twisted cubic") {
  RingPtr R = make_ring(4, Field::rationals());
  GinResult gin = generic_initial_ideal(R, twisted_cubic(R), TermOrder::grevlex(),
                                        /*seed=*/0, /*trials=*/2);
  CHECK(gin.agreed);
  MonomialIdeal expect = MonomialIdeal::make(
      R, {mono({2, 0, 0, 0}), mono({1, 1, 0, 0}), mono({0, 2, 0, 0})});
  CHECK(gin.ideal == expect);
  CHECK(is_strongly_stable(gin.ideal));
  CHECK(is_borel_type(gin.ideal));

  // Determinism: same seed, same answer.
  GinResult again = generic_initial_ideal(R, twisted_cubic(R),
                                          TermOrder::grevlex(), 0, 2);
  CHECK(again.ideal == gin.ideal);
  CHECK(again.trial_seeds == gin.trial_seeds);
}

TEST_CASE("gin rejects small prime fields") {
  RingPtr R = make_ring(4, Field::prime(7));
  try {
    generic_initial_ideal(R, twisted_cubic(R), TermOrder::grevlex(), 0, 1);
    FAIL("expected an error for a small coefficient field");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported);
  }
  RingPtr Rbig = make_ring(4, Field::prime(32003));
  GinResult gin = generic_initial_ideal(Rbig, twisted_cubic(Rbig),
                                        TermOrder::grevlex(), 0, 2);
  CHECK(gin.agreed);
  CHECK(is_borel_type(gin.ideal));
}

TEST_CASE("normal form is a well-defined remainder") {
  RingPtr R = make_ring(4, Field::rationals());
  GroebnerBasis gb = buchberger(R, twisted_cubic(R), TermOrder::grevlex());
  Polynomial f = poly(R, {{3, {0, 2, 0, 0}}, {5, {0, 0, 0, 2}}});
  Polynomial nf = normal_form(f, gb);
  // f - nf lies in the ideal, and nf has no term divisible by a leading term.
  CHECK(ideal_contains(gb, f - nf));
  MonomialIdeal in = initial_ideal(gb);
  for (const auto& t : nf.terms()) CHECK(!in.contains(t.m));
  // The normal form of a basis element is 0, and NF is idempotent.
  CHECK(normal_form(gb.basis()[0], gb).is_zero());
  CHECK(normal_form(nf, gb) == nf);
}
