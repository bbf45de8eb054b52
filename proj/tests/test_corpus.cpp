#include <doctest.h>

#include "cmreg/corpus.hpp"
#include "cmreg/groebner.hpp"

using namespace cmreg;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("toric kernel of the identity map is zero") {
  RingPtr R = make_ring(2, Field::rationals());
  std::vector<Polynomial> gens = toric_kernel({{1, 0}, {0, 1}}, R);
  CHECK(gens.empty());
}

TEST_CASE("toric kernel of the cuspidal parametrization") {
  // (t) -> (1, t^2, t^3); the constant row is the homogenizing coordinate of
  // the projective closure.
  RingPtr R = make_ring(3, Field::rationals());
  std::vector<Polynomial> gens = toric_kernel({{0}, {2}, {3}}, R);
  REQUIRE(gens.size() == 1);
  Polynomial cusp = Polynomial::make(
      R, {{mono({0, 3, 0}), mpq_class(1)}, {mono({1, 0, 2}), mpq_class(-1)}});
  CHECK((gens[0] == cusp || gens[0] == -cusp));
}

TEST_CASE("toric kernel of the rational normal cubic") {
  CorpusEntry tc = twisted_cubic();
  CHECK(tc.prime);
  CHECK(tc.file.id == "twisted-cubic");
  REQUIRE(tc.file.gens.size() == 3);
  for (const Polynomial& g : tc.file.gens) CHECK(g.degree() == 2);

  // Same ideal as the three standard 2x2 minors.
  const RingPtr& R = tc.file.ring;
  auto quad = [&](std::vector<std::uint32_t> a, std::vector<std::uint32_t> b) {
    return Polynomial::make(
        R, {{mono(std::move(a)), mpq_class(1)},
            {mono(std::move(b)), mpq_class(-1)}});
  };
  std::vector<Polynomial> minors = {quad({1, 0, 1, 0}, {0, 2, 0, 0}),
                                    quad({1, 0, 0, 1}, {0, 1, 1, 0}),
                                    quad({0, 1, 0, 1}, {0, 0, 2, 0})};
  GroebnerBasis g1 = buchberger(R, tc.file.gens, TermOrder::grevlex());
  GroebnerBasis g2 = buchberger(R, minors, TermOrder::grevlex());
  CHECK(same_ideal(g1, g2));

  IdealHandle H = corpus_handle(tc);
  CHECK(H.multiplicity() == 3);
  CHECK(H.adeg().source == "prime-degree");
  CHECK(H.adeg().arith_degree == 3);
  CHECK(H.reg_ideal() == 2);
}

TEST_CASE("toric kernel argument validation") {
  RingPtr R = make_ring(2, Field::rationals());
  CHECK_THROWS_AS(toric_kernel({{1, 0}}, R), Error);          // row count
  CHECK_THROWS_AS(toric_kernel({{1, -1}, {0, 1}}, R), Error); // negative
  CHECK_THROWS_AS(
      toric_kernel({{1, 0, 0, 0}, {0, 1, 0, 0}}, R), Error);  // 4 parameters
}

TEST_CASE("double plane entry") {
  CorpusEntry dp = double_plane(1);
  CHECK(!dp.prime);
  REQUIRE(dp.known_adeg.has_value());
  CHECK(*dp.known_adeg == 2);
  IdealHandle H = corpus_handle(dp);
  CHECK(H.dim() == 2);
  CHECK(H.multiplicity() == 2);
  CHECK(H.adeg().source == "supplied");
  CHECK(H.reg_quotient() == 1);

  CorpusEntry dp3 = double_plane(3);
  CHECK(dp3.file.id == "double-plane-t3");
  CHECK(dp3.file.expect.at("regq") == 3);
  CHECK(dp3.file.expect.at("e_1") == -2);
  CHECK_THROWS_AS(double_plane(0), Error);
}

TEST_CASE("borel intersection entry") {
  CorpusEntry bi = borel_intersection(4, 2, 3);
  CHECK(bi.file.id == "borel-intersection-n4c2r3");
  REQUIRE(bi.file.gens.size() == 4);
  std::vector<Monomial> expected = {mono({3, 0, 0, 0}), mono({0, 3, 0, 0}),
                                    mono({1, 0, 2, 0}), mono({0, 1, 2, 0})};
  std::vector<Monomial> gm;
  for (const Polynomial& g : bi.file.gens) {
    REQUIRE(g.nterms() == 1);
    gm.push_back(g.terms()[0].m);
  }
  CHECK(MonomialIdeal::make(bi.file.ring, gm) ==
        MonomialIdeal::make(bi.file.ring, expected));
  CHECK(bi.file.expect.at("regq") == 5);
  CHECK(bi.file.expect.at("adeg") == 17);
  CHECK(bi.file.expect.at("e_1") == -16);

  IdealHandle H = corpus_handle(bi);
  REQUIRE(H.monomial().has_value());
  CHECK(is_borel_type(*H.monomial()));
  CHECK(H.reg_quotient() == 5);

  CHECK_THROWS_AS(borel_intersection(4, 4, 3), Error);
  CHECK_THROWS_AS(borel_intersection(4, 2, 1), Error);
}

TEST_CASE("named corpus expectations hold") {
  for (CorpusEntry& entry : named_corpus()) {
    CAPTURE(entry.file.id);
    IdealHandle H = corpus_handle(entry);
    for (const auto& [key, want] : entry.file.expect) {
      CAPTURE(key);
      mpz_class got;
      if (key == "dim") got = H.dim();
      else if (key == "codim") got = H.codim();
      else if (key == "e") got = H.multiplicity();
      else if (key == "adeg") got = H.adeg().arith_degree;
      else if (key == "reg") got = H.reg_ideal();
      else if (key == "regq") got = H.reg_quotient();
      else if (key == "e_1") got = H.hpoly().e.at(1);
      else if (key == "postulation") got = H.postulation();
      else if (key == "delta") got = H.max_gen_degree();
      else if (key == "depth") got = H.depth();
      else if (key == "s") got = H.gotzmann().s;
      else continue;
      CHECK(got == want);
    }
  }
}

TEST_CASE("shipped corpus files match the recipes") {
  for (const CorpusEntry& entry : named_corpus()) {
    CAPTURE(entry.file.id);
    std::string path =
        std::string(CMREG_SOURCE_DIR) + "/corpus/" + entry.file.id + ".ideal";
    IdealFile disk = load_ideal_file(path, true);
    CHECK(serialize_ideal(disk) == serialize_ideal(entry.file));
  }
}

TEST_CASE("random ideals are deterministic and flavored") {
  auto a = random_ideals(3, 3, 5, 42, RandomFlavor::monomial);
  auto b = random_ideals(3, 3, 5, 42, RandomFlavor::monomial);
  REQUIRE(a.size() == 5);
  REQUIRE(b.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(serialize_ideal(a[i]) == serialize_ideal(b[i]));
    for (const Polynomial& g : a[i].gens) CHECK(g.nterms() == 1);
  }
  auto c = random_ideals(3, 3, 5, 43, RandomFlavor::monomial);
  bool all_same = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (serialize_ideal(a[i]) != serialize_ideal(c[i])) all_same = false;
  CHECK(!all_same);

  for (IdealFile& f : random_ideals(4, 3, 6, 7, RandomFlavor::squarefree)) {
    std::vector<Monomial> gens;
    for (const Polynomial& g : f.gens) gens.push_back(g.terms()[0].m);
    CHECK(MonomialIdeal::make(f.ring, gens).is_squarefree());
  }
  for (IdealFile& f : random_ideals(4, 4, 6, 7, RandomFlavor::borel)) {
    std::vector<Monomial> gens;
    for (const Polynomial& g : f.gens) gens.push_back(g.terms()[0].m);
    CHECK(is_strongly_stable(MonomialIdeal::make(f.ring, gens)));
  }
  for (IdealFile& f : random_ideals(3, 2, 4, 11, RandomFlavor::general)) {
    for (const Polynomial& g : f.gens) CHECK(g.is_homogeneous());
  }

  CHECK_THROWS_AS(random_ideals(9, 3, 1, 0, RandomFlavor::general), Error);
  CHECK_THROWS_AS(random_ideals(3, 9, 1, 0, RandomFlavor::general), Error);
}
