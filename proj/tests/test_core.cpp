#include <doctest.h>

#include "cmreg/linalg.hpp"
#include "cmreg/linchange.hpp"
#include "cmreg/polynomial.hpp"

using namespace cmreg;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

Polynomial poly(const RingPtr& ring,
                std::vector<std::pair<long, std::vector<std::uint32_t>>> terms) {
  std::vector<Term> ts;
  for (auto& [c, e] : terms) ts.push_back({mono(e), mpq_class(c)});
  return Polynomial::make(ring, std::move(ts));
}

}  // namespace

TEST_CASE("binomial helpers") {
  CHECK(binom_nat(5, 2) == 10);
  CHECK(binom_nat(5, 0) == 1);
  CHECK(binom_nat(3, 5) == 0);
  CHECK(binom_nat(-1, 2) == 0);
  CHECK(binom_nat(0, 0) == 1);
  CHECK(binom_poly(mpz_class(-1), 2) == 1);   // (-1)(-2)/2
  CHECK(binom_poly(mpz_class(-3), 3) == -10); // (-3)(-4)(-5)/6
  CHECK(binom_poly(mpz_class(7), 3) == 35);
  CHECK(binom_poly(mpz_class(4), 0) == 1);
}

TEST_CASE("seeded integers are deterministic") {
  SeededInts a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_entry() == b.next_entry());
  SeededInts c(mix_seed(1, 2)), d(mix_seed(1, 3));
  CHECK(c.next_raw() != d.next_raw());
  SeededInts e(7);
  for (int i = 0; i < 200; ++i) {
    long v = e.next_entry();
    CHECK(v >= -10000);
    CHECK(v <= 10000);
  }
}

TEST_CASE("prime field arithmetic") {
  Field F = Field::prime(7);
  CHECK(F.add(mpq_class(3), mpq_class(5)) == mpq_class(1));
  CHECK(F.mul(mpq_class(3), mpq_class(5)) == mpq_class(1));
  CHECK(F.inv(mpq_class(3)) == mpq_class(5));
  CHECK(F.neg(mpq_class(3)) == mpq_class(4));
  CHECK(F.reduce(mpq_class(-1)) == mpq_class(6));
  CHECK(F.reduce(mpq_class(1, 2)) == mpq_class(4));  // 1/2 = 4 mod 7
  CHECK_THROWS_AS(Field::prime(6), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  Field big = Field::prime(32003);
  CHECK(big.mul(big.inv(mpq_class(12345)), mpq_class(12345)) == mpq_class(1));
}

TEST_CASE("rational field reduces") {
  Field Q = Field::rationals();
  CHECK(Q.reduce(mpq_class(2, 4)) == mpq_class(1, 2));
  CHECK(Q.div(mpq_class(1), mpq_class(3)) == mpq_class(1, 3));
  CHECK_THROWS_AS(Q.inv(mpq_class(0)), Error);
  CHECK(Q.name() == "Q");
  CHECK(Field::prime(7).name() == "GF(7)");
}

TEST_CASE("monomial arithmetic") {
  Monomial a = mono({2, 0, 1});
  Monomial b = mono({1, 3, 0});
  CHECK(a.degree() == 3);
  CHECK((a * b) == mono({3, 3, 1}));
  CHECK(a.lcm(b) == mono({2, 3, 1}));
  CHECK(a.gcd(b) == mono({1, 0, 0}));
  CHECK(!a.coprime(b));
  CHECK(mono({0, 2, 0}).coprime(mono({1, 0, 1})));
  CHECK(b.divides(a * b));
  CHECK((a * b).divide(b) == a);
  CHECK_THROWS_AS(a.divide(b), Error);
  CHECK(a.max_var() == 3);
  CHECK(mono({3, 0, 0}).max_var() == 1);
  CHECK(mono({0, 0, 0}).max_var() == 0);
  CHECK(mono({1, 1, 0}).is_squarefree());
  CHECK(!a.is_squarefree());
}

TEST_CASE("term orders") {
  TermOrder lex = TermOrder::lex();
  TermOrder grevlex = TermOrder::grevlex();
  TermOrder grlex = TermOrder::grlex();

  // x2^2 vs x1*x3 (same degree): grevlex prefers the one with the smaller
  // exponent on the last variable where they differ.
  CHECK(grevlex.compare(mono({0, 2, 0}), mono({1, 0, 1})) > 0);
  CHECK(lex.compare(mono({0, 2, 0}), mono({1, 0, 1})) < 0);

  // Classic separation: x1*x2^2 > x1^2*x3 in grevlex, reversed in lex.
  CHECK(grevlex.compare(mono({1, 2, 0}), mono({2, 0, 1})) > 0);
  CHECK(lex.compare(mono({1, 2, 0}), mono({2, 0, 1})) < 0);

  // grlex sorts by degree first.
  CHECK(grlex.compare(mono({0, 0, 3}), mono({2, 0, 0})) > 0);
  CHECK(lex.compare(mono({0, 0, 3}), mono({2, 0, 0})) < 0);

  // Block order: the first block dominates regardless of degree.
  TermOrder blk = TermOrder::block(1);
  CHECK(blk.compare(mono({1, 0, 0}), mono({0, 5, 5})) > 0);
  CHECK(blk.compare(mono({1, 2, 0}), mono({1, 0, 1})) > 0);  // ties break grevlex

  CHECK(TermOrder::parse("lex").kind() == TermOrder::Kind::lex);
  CHECK(TermOrder::parse("block(2)").name() == "block(2)");
  CHECK_THROWS_AS(TermOrder::parse("??"), Error);
}

TEST_CASE("weight matrix orders") {
  // Graded-lex as a weight matrix.
  TermOrder w = TermOrder::weights({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}, 3);
  TermOrder grlex = TermOrder::grlex();
  Monomial a = mono({1, 2, 0});
  Monomial b = mono({0, 2, 1});
  CHECK(w.compare(a, b) == grlex.compare(a, b));

  // Rank-deficient matrices are not term orders.
  CHECK_THROWS_AS(TermOrder::weights({{1, 1, 0}, {0, 0, 1}, {1, 1, 1}}, 3),
                  Error);
  // A negative leading weight in some column is not a term order.
  CHECK_THROWS_AS(TermOrder::weights({{1, -1, 1}, {1, 0, 0}, {0, 0, 1}}, 3),
                  Error);
}

TEST_CASE("polynomial arithmetic over Q") {
  RingPtr R = make_ring(3, Field::rationals());
  Polynomial f = poly(R, {{2, {2, 0, 0}}, {-3, {0, 1, 1}}, {1, {0, 0, 0}}});
  Polynomial g = poly(R, {{1, {1, 1, 0}}, {5, {0, 0, 2}}});
  CHECK((f + g) - g == f);
  CHECK(f * g == g * f);
  CHECK((f - f).is_zero());
  CHECK(f.degree() == 2);
  CHECK(!f.is_homogeneous());
  CHECK(poly(R, {{1, {2, 0, 0}}, {4, {1, 1, 0}}}).is_homogeneous());

  // Merging terms and dropping zeros.
  Polynomial h = Polynomial::make(
      R, {{mono({1, 0, 0}), mpq_class(1)}, {mono({1, 0, 0}), mpq_class(-1)}});
  CHECK(h.is_zero());

  Polynomial prod = poly(R, {{1, {1, 0, 0}}, {1, {0, 1, 0}}}) *
                    poly(R, {{1, {1, 0, 0}}, {-1, {0, 1, 0}}});
  CHECK(prod == poly(R, {{1, {2, 0, 0}}, {-1, {0, 2, 0}}}));
}

TEST_CASE("polynomial normalization and printing") {
  RingPtr R = make_ring(2, Field::rationals(), {"x", "y"});
  Polynomial f = Polynomial::make(R, {{mono({2, 0}), mpq_class(2, 3)},
                                      {mono({0, 2}), mpq_class(-4, 3)}});
  Polynomial n = f.normalized(TermOrder::grevlex());
  CHECK(n == poly(R, {{1, {2, 0}}, {-2, {0, 2}}}));
  CHECK(n.str() == "x^2 - 2*y^2");

  // Negative leading coefficient flips sign.
  Polynomial m = poly(R, {{-3, {1, 1}}, {6, {0, 1}}}).normalized(TermOrder::grevlex());
  CHECK(m == poly(R, {{1, {1, 1}}, {-2, {0, 1}}}));

  RingPtr Fp = make_ring(2, Field::prime(7), {"x", "y"});
  Polynomial pf = Polynomial::make(Fp, {{mono({2, 0}), mpq_class(3)},
                                        {mono({0, 1}), mpq_class(2)}});
  Polynomial pn = pf.normalized(TermOrder::grevlex());
  CHECK(pn.leading_term(TermOrder::grevlex()).c == mpq_class(1));

  CHECK(Polynomial::constant(R, mpq_class(0)).str() == "0");
  CHECK(poly(R, {{1, {0, 0}}}).str() == "1");
  CHECK(poly(R, {{-1, {1, 0}}}).str() == "-x");
}

TEST_CASE("substitution") {
  RingPtr R = make_ring(2, Field::rationals(), {"x", "y"});
  Polynomial f = poly(R, {{1, {2, 0}}, {1, {0, 1}}});  // x^2 + y
  std::vector<Polynomial> images = {poly(R, {{1, {0, 1}}}),   // x -> y
                                    poly(R, {{1, {1, 0}}})};  // y -> x
  CHECK(f.substitute(R, images) == poly(R, {{1, {0, 2}}, {1, {1, 0}}}));

  // Evaluation at a point is substitution by constants.
  std::vector<Polynomial> at = {Polynomial::constant(R, 2),
                                Polynomial::constant(R, -1)};
  CHECK(f.substitute(R, at) == Polynomial::constant(R, 3));
}

TEST_CASE("exact row reduction") {
  Field Q = Field::rationals();
  RowReducer red(Q, 3);
  CHECK(red.add_row({mpq_class(1), mpq_class(2), mpq_class(3)}));
  CHECK(red.add_row({mpq_class(0), mpq_class(1), mpq_class(1)}));
  CHECK(!red.add_row({mpq_class(1), mpq_class(3), mpq_class(4)}));  // sum
  CHECK(red.rank() == 2);
  CHECK(red.add_row({mpq_class(0), mpq_class(0), mpq_class(1)}));
  CHECK(red.rank() == 3);

  auto inv = invert_matrix(Q, {{mpq_class(2), mpq_class(1)},
                               {mpq_class(1), mpq_class(1)}});
  REQUIRE(inv.has_value());
  CHECK((*inv)[0][0] == mpq_class(1));
  CHECK((*inv)[0][1] == mpq_class(-1));
  auto sing = invert_matrix(Q, {{mpq_class(1), mpq_class(2)},
                                {mpq_class(2), mpq_class(4)}});
  CHECK(!sing.has_value());
}

TEST_CASE("random linear change round trip") {
  RingPtr R = make_ring(3, Field::rationals());
  LinearChange phi = LinearChange::random(R, 12345);
  LinearChange inv = phi.inverse();
  Polynomial f = poly(R, {{3, {2, 1, 0}}, {-1, {0, 0, 3}}, {7, {1, 0, 0}}});
  CHECK(inv.apply(phi.apply(f)) == f);

  // Determinism in the seed.
  LinearChange phi2 = LinearChange::random(R, 12345);
  CHECK(phi.apply(f) == phi2.apply(f));
  LinearChange phi3 = LinearChange::random(R, 54321);
  CHECK(phi.apply(f) != phi3.apply(f));

  Polynomial l = LinearChange::random_linear_form(R, 99);
  CHECK(l.degree() == 1);
  CHECK(l.is_homogeneous());
}
