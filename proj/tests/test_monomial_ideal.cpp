#include <doctest.h>

#include <algorithm>

#include "cmreg/monomial_ideal.hpp"

using namespace cmreg;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

RingPtr R2() { return make_ring(2, Field::rationals(), {"x", "y"}); }
RingPtr R3() { return make_ring(3, Field::rationals()); }
RingPtr R4() { return make_ring(4, Field::rationals()); }

// (x1^3, x2^3, x1*x3^2, x2*x3^2) in four variables: Borel type, not strongly
// stable, dimension 2.
MonomialIdeal mixed_example() {
  return MonomialIdeal::make(
      R4(), {mono({3, 0, 0, 0}), mono({0, 3, 0, 0}), mono({1, 0, 2, 0}),
             mono({0, 1, 2, 0})});
}

}  // namespace

TEST_CASE("minimal generators") {
  MonomialIdeal I = MonomialIdeal::make(
      R2(), {mono({1, 0}), mono({2, 0}), mono({1, 1}), mono({1, 0})});
  CHECK(I.ngens() == 1);
  CHECK(I.gens()[0] == mono({1, 0}));
  CHECK(I.contains(mono({3, 2})));
  CHECK(!I.contains(mono({0, 5})));

  CHECK(MonomialIdeal::make(R2(), {}).is_zero());
  CHECK(MonomialIdeal::unit(R2()).is_unit());
  CHECK(MonomialIdeal::make(R2(), {mono({0, 0}), mono({1, 0})}).is_unit());
}

TEST_CASE("sum intersection colon") {
  RingPtr R = R2();
  MonomialIdeal x = MonomialIdeal::make(R, {mono({1, 0})});
  MonomialIdeal y = MonomialIdeal::make(R, {mono({0, 1})});
  CHECK(x.intersect(y) == MonomialIdeal::make(R, {mono({1, 1})}));
  CHECK(x.sum(y) == MonomialIdeal::make(R, {mono({1, 0}), mono({0, 1})}));

  MonomialIdeal I = MonomialIdeal::make(R, {mono({2, 0}), mono({1, 1})});
  CHECK(I.colon(mono({1, 0})) ==
        MonomialIdeal::make(R, {mono({1, 0}), mono({0, 1})}));
  // (I : I) = (1); (I : 0-ideal) = (1).
  CHECK(I.colon(I).is_unit());
  CHECK(I.colon(MonomialIdeal::make(R, {})).is_unit());
  // ((x^2, xy) : (y)) = (x).
  CHECK(I.colon(y) == x);
}

TEST_CASE("variable saturations") {
  RingPtr R = R3();
  // I = (x1*x3^2, x2^2): saturating away x3 keeps x1.
  MonomialIdeal I = MonomialIdeal::make(R, {mono({1, 0, 2}), mono({0, 2, 0})});
  CHECK(I.var_saturate(3) ==
        MonomialIdeal::make(R, {mono({1, 0, 0}), mono({0, 2, 0})}));
  CHECK(I.var_saturate(2) ==
        MonomialIdeal::make(R, {mono({1, 0, 2}), mono({0, 0, 0})}));

  MonomialIdeal J = MonomialIdeal::make(R, {mono({2, 0, 0}), mono({1, 1, 0})});
  // (x1^2, x1x2) : (x1, x2)^infty = (x1).
  CHECK(J.initial_segment_saturate(2) ==
        MonomialIdeal::make(R, {mono({1, 0, 0})}));
  // In three variables no component is (x1,x2,x3)-primary, so J is saturated;
  // in two variables the same generators saturate to (x).
  CHECK(J.m_saturate() == J);
  RingPtr R2v = make_ring(2, Field::rationals(), {"x", "y"});
  MonomialIdeal J2 = MonomialIdeal::make(R2v, {mono({2, 0}), mono({1, 1})});
  CHECK(J2.m_saturate() == MonomialIdeal::make(R2v, {mono({1, 0})}));

  // An (x1..xn)-primary ideal saturates to the unit ideal.
  MonomialIdeal P = MonomialIdeal::make(
      R, {mono({2, 0, 0}), mono({0, 2, 0}), mono({0, 0, 2})});
  CHECK(P.m_saturate().is_unit());
}

TEST_CASE("radical and squarefree") {
  RingPtr R = R3();
  MonomialIdeal I = MonomialIdeal::make(R, {mono({3, 0, 0}), mono({2, 2, 0})});
  CHECK(I.radical() == MonomialIdeal::make(R, {mono({1, 0, 0})}));
  CHECK(!I.is_squarefree());
  CHECK(I.radical().is_squarefree());
}

TEST_CASE("irreducible and primary decomposition") {
  RingPtr R = R2();
  MonomialIdeal I = MonomialIdeal::make(R, {mono({2, 0}), mono({1, 1})});
  auto parts = irreducible_decomposition(I);
  REQUIRE(parts.size() == 2);
  // (x^2, xy) = (x) cap (x^2, y).
  MonomialIdeal a = MonomialIdeal::make(R, {mono({1, 0})});
  MonomialIdeal b = MonomialIdeal::make(R, {mono({2, 0}), mono({0, 1})});
  CHECK(((parts[0] == a && parts[1] == b) || (parts[0] == b && parts[1] == a)));
  CHECK(parts[0].intersect(parts[1]) == I);

  auto prim = primary_decomposition(I);
  REQUIRE(prim.size() == 2);
  std::vector<size_t> sizes = {prim[0].prime_support.size(),
                               prim[1].prime_support.size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes[0] == 1);  // (x)
  CHECK(sizes[1] == 2);  // (x^2, y)

  // Irredundancy: intersecting a decomposition with a redundant extra part
  // still returns exactly the irredundant components.
  MonomialIdeal J = MonomialIdeal::make(
      R3(), {mono({1, 1, 0}), mono({1, 0, 1}), mono({0, 1, 1})});
  auto jp = irreducible_decomposition(J);
  CHECK(jp.size() == 3);  // (x1,x2) cap (x1,x3) cap (x2,x3)
  for (const auto& p : jp) CHECK(p.ngens() == 2);
}

TEST_CASE("dimension via the support complex") {
  CHECK(dimension(MonomialIdeal::make(
            R3(), {mono({1, 1, 0}), mono({1, 0, 1})})) == 2);  // V(x1) survives
  CHECK(dimension(MonomialIdeal::make(R3(), {mono({1, 0, 0})})) == 2);
  CHECK(dimension(MonomialIdeal::make(
            R3(), {mono({2, 0, 0}), mono({0, 2, 0}), mono({0, 0, 2})})) == 0);
  CHECK(dimension(MonomialIdeal::make(R3(), {})) == 3);
  CHECK(dimension(mixed_example()) == 2);
}

TEST_CASE("standard pairs and degree data") {
  RingPtr R = R2();
  MonomialIdeal I = MonomialIdeal::make(R, {mono({2, 0}), mono({1, 1})});
  auto pairs = standard_pairs(I);
  // (1, {y}) and (x, {}).
  REQUIRE(pairs.size() == 2);
  DegreeData dd = degree_data(I);
  CHECK(dd.dim == 1);
  CHECK(dd.codim == 1);
  CHECK(dd.degree == 1);
  CHECK(dd.arith_degree == 2);
  REQUIRE(dd.layer.size() == 2);
  CHECK(dd.layer[0] == 1);
  CHECK(dd.layer[1] == 1);
  REQUIRE(dd.colength_split.has_value());
  CHECK(*dd.colength_split == 2);  // K[x]/(x^2)

  DegreeData mx = degree_data(mixed_example());
  CHECK(mx.dim == 2);
  CHECK(mx.codim == 2);
  CHECK(mx.degree == 1);
  CHECK(mx.arith_degree == 17);
  CHECK(mx.layer[2] == 1);
  CHECK(mx.layer[0] + mx.layer[1] == 16);
  REQUIRE(mx.colength_split.has_value());
  CHECK(*mx.colength_split == 9);  // K[x1,x2]/(x1^3, x2^3)
}

TEST_CASE("degree data matches the multiplicity of a simplicial example") {
  // Squarefree: I = (x1x2, x1x3) has components (x1) and (x2,x3):
  // dim 2, degree 1, arithmetic degree 2 (one embedded-free extra component).
  MonomialIdeal I = MonomialIdeal::make(
      R3(), {mono({1, 1, 0}), mono({1, 0, 1})});
  DegreeData dd = degree_data(I);
  CHECK(dd.dim == 2);
  CHECK(dd.degree == 1);
  CHECK(dd.arith_degree == 2);
}

TEST_CASE("strongly stable and borel type predicates") {
  RingPtr R = R2();
  MonomialIdeal ss = MonomialIdeal::make(
      R, {mono({2, 0}), mono({1, 1}), mono({0, 2})});
  CHECK(is_strongly_stable(ss));
  CHECK(is_borel_type(ss));

  // (x1^2, x2^2) is Borel type (both variable saturations hit (1)) but not
  // strongly stable (x1*x2 is missing).
  MonomialIdeal bt = MonomialIdeal::make(R, {mono({2, 0}), mono({0, 2})});
  CHECK(!is_strongly_stable(bt));
  CHECK(is_borel_type(bt));

  // (x1*x3) is not Borel type: saturating by x3 gives (x1), but saturating
  // by (x1,x2,x3) gives (x1*x3) back.
  MonomialIdeal nb = MonomialIdeal::make(R3(), {mono({1, 0, 1})});
  CHECK(!is_borel_type(nb));

  CHECK(is_borel_type(mixed_example()));
  CHECK(!is_strongly_stable(mixed_example()));

  // Stability is a property of minimal generators, so scaling by new gens
  // that are swaps must be detected: (x1x2) alone is not strongly stable.
  CHECK(!is_strongly_stable(MonomialIdeal::make(R, {mono({1, 1})})));
}

TEST_CASE("max var") {
  CHECK(mixed_example().max_var() == 3);
  CHECK(MonomialIdeal::make(R3(), {mono({2, 0, 0})}).max_var() == 1);
  CHECK(MonomialIdeal::make(R3(), {}).max_var() == 0);
}
