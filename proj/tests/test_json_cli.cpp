#include "doctest.h"
#include "pentagon/catalog.hpp"
#include "pentagon/classifier.hpp"
#include "pentagon/json_io.hpp"
#include "pentagon/report.hpp"

using namespace pentagon;

TEST_CASE("json round trips are the identity") {
  SUBCASE("solutions") {
    for (const auto& s : enumerate_solutions(2, eq_tag::rpe)) {
      FiniteSolution back = solution_from_json(to_json(s));
      CHECK(back == s);
      CHECK(back.tag() == s.tag());
    }
  }
  SUBCASE("groups") {
    for (const char* name : {"S3", "Q8", "A4"}) {
      FiniteGroup g = catalog_group(name);
      FiniteGroup back = group_from_json(to_json(g));
      CHECK(back.cayley() == g.cayley());
    }
  }
  SUBCASE("hopf algebras, including cyclotomic entries") {
    CharacterTable t = characters(catalog_group("Z3"));
    FinHopf h = dual_group_algebra(catalog_group("S3"));
    FinHopf back = hopf_from_json(to_json(h));
    CHECK(back.mult == h.mult);
    CHECK(back.comult == h.comult);
    CHECK(back.unit == h.unit);
    CHECK(back.counit == h.counit);
    REQUIRE(back.antipode.has_value());
    CHECK(*back.antipode == *h.antipode);
    // a matrix over Q(zeta_3)
    Mat p(2, 2, 3);
    p.set(0, 0, Cyc::root(3));
    p.set(1, 0, Cyc(Rational(-7, 3), 3));
    p.set(1, 1, Cyc::root(3, 2) + Cyc(Rational(1, 2), 3));
    CHECK(mat_from_json(to_json(p)) == p);
    (void)t;
  }
  SUBCASE("matched pairs") {
    MatchedPairGroups mp{catalog_group("Z3"), catalog_group("Z2"), {}, {}};
    mp.ract = {{0, 0}, {1, 2}, {2, 1}};
    mp.lact = {{0, 1}, {0, 1}, {0, 1}};
    MatchedPairGroups back = matched_pair_from_json(to_json(mp));
    CHECK(back.ract == mp.ract);
    CHECK(back.lact == mp.lact);
    CHECK(back.b.cayley() == mp.b.cayley());
    CHECK(back.n.cayley() == mp.n.cayley());
  }
  SUBCASE("tensors and vectors") {
    Tensor3 t3(3, 4);
    t3.set(0, 1, 2, Cyc::root(4));
    t3.set(2, 2, 2, Cyc(Rational(5, 8), 4));
    CHECK(tensor_from_json(to_json(t3)) == t3);
    Vec v(3, 4);
    v[1] = Cyc::root(4, 3);
    CHECK(vec_from_json(to_json(v)) == v);
  }
}

TEST_CASE("malformed input is rejected") {
  json bad = {{"n", 2}, {"map", json::array({json::array({0, 0, 0, 0})})}};
  CHECK_THROWS_AS((void)solution_from_json(bad), error);
  json bad_group = {{"n", 2}, {"cayley", json::array({json::array({0, 1}), json::array({1, 1})})}};
  CHECK_THROWS_AS((void)group_from_json(bad_group), error);
}

TEST_CASE("run report renders identically in both forms") {
  RunReport rep;
  rep.command = "demo";
  rep.value("dim", "4");
  rep.add("first", true);
  rep.add("second", false, "witness (0,1)");
  CHECK_FALSE(rep.all_ok());
  json j = rep.to_json();
  CHECK(j["ok"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][1]["detail"] == "witness (0,1)");
  CHECK(j["values"]["dim"] == "4");
  std::string text = rep.render_text();
  CHECK(text.find("[FAIL] second") != std::string::npos);
  CHECK(text.find("witness (0,1)") != std::string::npos);
  CHECK(text.find("dim: 4") != std::string::npos);
}

TEST_CASE("catalog objects validate on load") {
  CHECK(verify_equation(catalog_solution("group_solution:Z3"), eq_tag::rpe));
  CHECK(catalog_solution("group_solution:Z3").size() == 3);
  CHECK(verify_equation(catalog_solution("hopf_example:HxGdual"), eq_tag::rpe));
  CHECK(verify_hopf(catalog_hopf("group-algebra:S3")).all_ok());
  CHECK_THROWS_AS((void)catalog_solution("nonsense:thing"), error);
}
