#include <doctest.h>

#include <string>

#include "cmreg/bounds.hpp"

using namespace cmreg;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

mpz_class ev(const std::string& name, const InvariantMap& args) {
  return eval_bound(name, args);
}

const BoundCheck* find_check(const BoundReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

MonomialIdeal subspace_with_fat_part(const RingPtr& R) {
  return MonomialIdeal::make(
      R, {mono({3, 0, 0, 0}), mono({0, 3, 0, 0}), mono({1, 0, 2, 0}),
          mono({0, 1, 2, 0})});
}

}  // namespace

TEST_CASE("formula registry frozen values") {
  CHECK(ev("reg-from-adeg-reduced", {{"e", 2}, {"adeg", 2}, {"d", 2}}) == 3);
  CHECK(ev("regq-from-adeg-reduced", {{"e", 2}, {"adeg", 2}, {"d", 2}}) == 2);
  CHECK(ev("h1-from-adeg-reduced", {{"e", 2}, {"adeg", 2}, {"d", 2}}) == 1);
  CHECK(ev("reg-from-adeg-reduced", {{"e", 2}, {"adeg", 2}, {"d", 4}}) == 81);

  CHECK(ev("reg-from-gen-degrees", {{"pi", 4}, {"delta", 2}, {"d", 2}}) == 25);
  CHECK(ev("regq-from-gen-degrees", {{"pi", 4}, {"delta", 2}, {"d", 2}}) == 24);
  CHECK(ev("h0-from-gen-degrees", {{"pi", 4}, {"delta", 2}, {"d", 2}}) == 20);

  CHECK(ev("b-growth", {{"m", 2}, {"alpha", 1}, {"beta", 1}, {"j", 2}}) ==
        4096);

  CHECK(ev("reg-from-adeg-surface", {{"adeg", 6}}) == 6);
  CHECK(ev("regq-dim-le-one", {{"sigma", 4}, {"delta", 3}}) == 6);
  CHECK(ev("h0-from-pi-curve", {{"pi", 9}}) == 8);
  CHECK(ev("h1-sum-cm-curve", {{"e", 3}}) == 3);
  CHECK(ev("h1-at-minus-one", {{"adeg", 17}, {"e", 1}}) == 16);

  CHECK(ev("e1-from-adeg-reg", {{"adeg", 6}, {"c", 2}, {"reg", 5}}) == 180);
  CHECK(ev("ei-from-adeg-reg", {{"adeg", 6}, {"c", 2}, {"reg", 5}, {"i", 1}}) ==
        270);
  CHECK(ev("e1-from-max-deg-reg",
           {{"delta", 3}, {"adeg", 2}, {"c", 2}, {"reg", 4}}) == 36);
  CHECK(ev("e1-from-pi-reg", {{"pi", 9}, {"reg", 6}}) == 54);
  CHECK(ev("ei-from-pi-reg", {{"pi", 3}, {"reg", 2}, {"i", 2}}) == 18);
  CHECK(ev("e1-from-adeg-reduced", {{"e", 3}, {"adeg", 3}, {"c", 2}}) == 54);
  CHECK(ev("ei-from-adeg-reduced",
           {{"e", 3}, {"adeg", 3}, {"c", 2}, {"i", 2}}) == 17496);
  CHECK(ev("e1-from-gen-degrees", {{"pi", 4}, {"delta", 2}}) == 100);
  CHECK(ev("ei-from-gen-degrees", {{"pi", 4}, {"delta", 2}, {"i", 1}}) == 150);
  CHECK(ev("ei-monomial",
           {{"adeg", 17}, {"delta", 3}, {"n", 4}, {"c", 2}, {"i", 1}}) == 162);

  // Strict "<" formula: the bound value is the largest admissible integer, so
  // an exact power drops by one while a non-integer power plain-floors.
  CHECK(ev("ei-from-delta", {{"delta", 2}, {"c", 1}, {"i", 1}}) == 124);
  CHECK(ev("ei-from-delta", {{"delta", 1}, {"c", 1}, {"i", 1}}) == 15);

  CHECK(ev("hilbert-from-cap", {{"b", 3}, {"d", 2}, {"t", 4}}) == 13);
  CHECK(ev("h0-from-cap", {{"b", 3}, {"d", 2}, {"t", 4}}) == 8);
  CHECK(ev("hj-from-cap",
           {{"b", 3}, {"d", 2}, {"j", 1}, {"t", 0}, {"regq", 2}}) == 4);
  CHECK(ev("hd-from-cap", {{"e", 3}, {"d", 2}, {"t", -2}, {"regq", 1}}) == 6);
  CHECK(ev("chain-module-from-colength",
           {{"B", 9}, {"ni", 4}, {"c", 2}, {"t", 3}}) == 24);

  CHECK(ev("codim-from-adeg-radical", {{"d", 2}, {"adeg", 3}}) == 4);
  CHECK(ev("reg-in-from-gotzmann", {{"reg", 2}, {"b_last", 4}}) == 4);
  CHECK(ev("reg-hilb-from-delta", {{"delta", 2}, {"c", 1}, {"d", 1}}) == 5);
  CHECK(ev("reg-hilb-from-delta", {{"delta", 2}, {"c", 2}, {"d", 2}}) == 4096);
  CHECK(ev("reg-hilb-from-adeg", {{"adeg", 2}, {"n", 3}, {"d", 1}}) == 4);
}

TEST_CASE("hilbert-regularity bound matches the iterated growth formula") {
  // Base (3 delta^c + 2 delta)/2 an exact integer M: iterating j = d-1
  // doubling steps from exponent alpha = 1, beta = 1 reproduces the one-shot
  // d * 2^(d-1) exponent.
  mpz_class one_shot =
      ev("reg-hilb-from-delta", {{"delta", 2}, {"c", 2}, {"d", 2}});
  mpz_class iterated =
      ev("b-growth", {{"m", 8}, {"alpha", 1}, {"beta", 1}, {"j", 1}});
  CHECK(one_shot == iterated);
}

TEST_CASE("registry is complete and sorted") {
  std::vector<std::string> names = bound_names();
  CHECK(names.size() == 33);
  CHECK(std::is_sorted(names.begin(), names.end()));

  InvariantMap all{{"e", 3},      {"adeg", 4},  {"d", 3},    {"pi", 6},
                   {"delta", 3},  {"sigma", 4}, {"c", 2},    {"reg", 5},
                   {"i", 1},      {"n", 5},     {"b", 4},    {"t", 3},
                   {"regq", 4},   {"j", 1},     {"b_last", 7}, {"alpha", 1},
                   {"beta", 1},   {"m", 2},     {"B", 9},    {"ni", 5}};
  for (const std::string& name : names) {
    mpz_class value = ev(name, all);
    CHECK(value >= 0);
  }
}

TEST_CASE("formula errors carry the missing key") {
  try {
    eval_bound("reg-from-adeg-reduced", {});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_input);
    CHECK(std::string(e.what()).find("needs invariant 'e'") !=
          std::string::npos);
  }
  CHECK_THROWS_AS(eval_bound("no-such-bound", {}), Error);
  CHECK_THROWS_AS(
      eval_bound("reg-from-adeg-reduced", {{"e", 2}, {"adeg", 2}, {"d", 1}}),
      Error);
}

TEST_CASE("audit of a Borel-type monomial ideal") {
  RingPtr R = make_ring(4, Field::rationals());
  IdealHandle H(subspace_with_fat_part(R));
  BoundReport rep = audit_ideal(H, "fat-subspace");

  CHECK(rep.id == "fat-subspace");
  CHECK(rep.errors.empty());
  CHECK(!rep.violation);

  const InvariantSnapshot& v = rep.invariants;
  CHECK(v.n == 4);
  CHECK(v.d == 2);
  CHECK(v.c == 2);
  CHECK(v.delta == 3);
  CHECK(v.pi == 9);
  CHECK(v.sigma == 4);
  CHECK(v.e == 1);
  CHECK(v.adeg.has_value());
  CHECK(*v.adeg == 17);
  CHECK(v.adeg_exact);
  CHECK(v.reg_quotient == 5);
  CHECK(v.reg_ideal == 6);
  CHECK(v.reg_confidence == "exact");
  CHECK(v.depth == 1);
  CHECK(v.colength.has_value());
  CHECK(*v.colength == 9);
  CHECK(v.borel_type);
  CHECK(!v.strongly_stable);
  CHECK(!v.reduced_known);
  CHECK(v.b_list == std::vector<mpz_class>{1, 17});

  const BoundCheck* euler = find_check(rep, "euler-residual");
  REQUIRE(euler != nullptr);
  CHECK(euler->satisfied);
  CHECK(euler->actual == 0);
  CHECK(euler->hypotheses_met);

  const BoundCheck* chain = find_check(rep, "last-chain-length-eq-degree");
  REQUIRE(chain != nullptr);
  CHECK(chain->satisfied);
  CHECK(chain->actual == 1);

  const BoundCheck* e1 = find_check(rep, "e1-from-pi-reg");
  REQUIRE(e1 != nullptr);
  CHECK(e1->actual == 16);
  CHECK(e1->bound == 54);
  CHECK(e1->satisfied);
  CHECK(e1->hypotheses_met);

  const BoundCheck* em = find_check(rep, "ei-monomial[i=1]");
  REQUIRE(em != nullptr);
  CHECK(em->bound == 162);
  CHECK(em->satisfied);
  CHECK(em->hypotheses_met);

  // The alternating-sum recovery of h^1(-1) hits the cap adeg - e exactly.
  const BoundCheck* h1 = find_check(rep, "h1-at-minus-one");
  REQUIRE(h1 != nullptr);
  CHECK(h1->actual == 16);
  CHECK(h1->bound == 16);
  CHECK(h1->satisfied);
  CHECK(!h1->hypotheses_met);  // not known reduced

  const BoundCheck* cc = find_check(rep, "chain-module-from-colength");
  REQUIRE(cc != nullptr);
  CHECK(cc->satisfied);
  CHECK(!cc->hypotheses_met);  // Borel type but not strongly stable

  const BoundCheck* b0 = find_check(rep, "b0-equals-degree");
  REQUIRE(b0 != nullptr);
  CHECK(b0->satisfied);

  const BoundCheck* rin = find_check(rep, "reg-in-from-gotzmann[grevlex]");
  REQUIRE(rin != nullptr);
  CHECK(rin->actual == 6);
  CHECK(rin->bound == 17);
  CHECK(rin->satisfied);
  CHECK(rin->hypotheses_met);
}

TEST_CASE("audit of the twisted cubic") {
  RingPtr R = make_ring(4, Field::rationals());
  auto poly = [&](std::vector<std::pair<long, std::vector<std::uint32_t>>> ts) {
    std::vector<Term> terms;
    for (auto& [c, e] : ts) terms.push_back({mono(e), mpq_class(c)});
    return Polynomial::make(R, std::move(terms));
  };
  IdealHandle H(R, {poly({{1, {1, 0, 1, 0}}, {-1, {0, 2, 0, 0}}}),
                    poly({{1, {1, 0, 0, 1}}, {-1, {0, 1, 1, 0}}}),
                    poly({{1, {0, 1, 0, 1}}, {-1, {0, 0, 2, 0}}})});
  H.declare_prime();
  BoundReport rep = audit_ideal(H, "twisted-cubic");

  CHECK(rep.errors.empty());
  CHECK(!rep.violation);
  CHECK(rep.invariants.reduced_known);
  CHECK(rep.invariants.adeg_exact);
  CHECK(rep.invariants.reg_confidence == "generic");

  const BoundCheck* surface = find_check(rep, "reg-from-adeg-surface");
  REQUIRE(surface != nullptr);
  CHECK(surface->actual == 2);
  CHECK(surface->bound == 3);
  CHECK(surface->satisfied);

  const BoundCheck* codim = find_check(rep, "codim-from-adeg-radical");
  REQUIRE(codim != nullptr);
  CHECK(codim->actual == 2);
  CHECK(codim->bound == 4);
  CHECK(codim->satisfied);
  CHECK(codim->hypotheses_met);

  const BoundCheck* bs = find_check(rep, "b-sequence-recursion");
  REQUIRE(bs != nullptr);
  CHECK(bs->satisfied);
  const BoundCheck* slast = find_check(rep, "s-equals-last-b");
  REQUIRE(slast != nullptr);
  CHECK(slast->satisfied);
  CHECK(slast->actual == 4);
}

TEST_CASE("audit input guards") {
  RingPtr R = make_ring(2, Field::rationals());
  auto term = [&](long c, std::vector<std::uint32_t> e) {
    return Term{mono(std::move(e)), mpq_class(c)};
  };
  IdealHandle unit(R, {Polynomial::make(R, {term(1, {0, 0})})});
  CHECK_THROWS_AS(audit_ideal(unit, "unit"), Error);

  IdealHandle inhom(
      R, {Polynomial::make(R, {term(1, {2, 0}), term(1, {1, 0})})});
  CHECK_THROWS_AS(audit_ideal(inhom, "inhomogeneous"), Error);
}

TEST_CASE("finiteness explorer on coordinate points") {
  FinitenessResult r = finiteness_explorer(3, 2, 1);
  CHECK(r.ideals_examined == 6);
  CHECK(r.functions.size() == 2);
  CHECK(r.max_reg_quotient == 1);
  CHECK(r.reg_cap == 3);
  CHECK(r.all_within_cap);

  CHECK_THROWS_AS(finiteness_explorer(7, 1, 1), Error);
  CHECK_THROWS_AS(finiteness_explorer(3, 2, 3), Error);
  CHECK_THROWS_AS(finiteness_explorer(3, 0, 1), Error);
}
