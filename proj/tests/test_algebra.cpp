#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "hdv/profile.hpp"

using namespace hdv;
using namespace fixtures;

TEST_CASE("variety class names round trip") {
  for (auto s : {"heyting", "ws5", "hri", "hdp:1", "hdp:3", "dht:2"}) {
    CHECK(VarietyClass::parse(s).to_string() == s);
  }
  CHECK_THROWS_AS(VarietyClass::parse("hdp"), structure_error);
  CHECK_THROWS_AS(VarietyClass::parse("ws5:1"), structure_error);
  CHECK_THROWS_AS(VarietyClass::parse("hdp:0"), structure_error);
  CHECK_THROWS_AS(VarietyClass::parse("s4"), structure_error);
}

TEST_CASE("fixtures validate") {
  for (auto const& A : {two_ws5(), c3_simple(), b4_disc(), b4_prod(), c3_hri(), c3_hdp(),
                        b4_hri(), c3_dht()}) {
    INFO(A.name);
    auto r = validate(A);
    CHECK(r.valid);
    CHECK(r.violations.empty());
    CHECK(is_canonical(A));
  }
}

TEST_CASE("identity box on the 3-chain has a non-Boolean open element") {
  auto r = validate(c3_identity_box());
  REQUIRE_FALSE(r.valid);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].axiom == "open elements Boolean");
  CHECK(r.violations[0].witness == std::vector<elem>{m});
}

TEST_CASE("validate reports every violation") {
  auto A         = b4_prod();
  A.box_table    = UnaryTable{0, 0, 0, 0};
  auto r         = validate(A);
  CHECK_FALSE(r.valid);
  CHECK(r.has("box top"));
  auto broken             = chain(3);
  broken.impl_table.at(2, 0) = 1;
  auto r2                 = validate(broken);
  CHECK(r2.has("residuation"));
}

TEST_CASE("malformed tables are structural errors, not axiom violations") {
  auto A              = two_ws5();
  A.meet_table.at(0, 1) = 5;
  CHECK_THROWS_AS(validate(A), structure_error);
  auto B      = two_ws5();
  B.box_table = UnaryTable{0};
  CHECK_THROWS_AS(validate(B), structure_error);
  auto C        = two_ws5();
  C.invol_table = UnaryTable{1, 0};
  CHECK_THROWS_AS(validate(C), structure_error);
  auto D      = chain(2);
  D.cls       = VarietyClass::ws5();
  CHECK_THROWS_AS(validate(D), structure_error);
}

TEST_CASE("derived box of the 3-chain with involution") {
  auto A = c3_hri();
  CHECK(*A.box_table == UnaryTable{0, 0, 2});
}

TEST_CASE("dual pseudocomplement of the 3-chain") {
  auto A = c3_hdp();
  CHECK(*A.dualneg_table == UnaryTable{2, 2, 0});
  CHECK(compute_dual_pseudocomplement(A) == *A.dualneg_table);
  CHECK(infer_level(A) == 1);
  CHECK(*A.box_table == UnaryTable{0, 0, 2});
}

TEST_CASE("two-element algebra as HRI has identity box") {
  auto A        = chain(2);
  A.cls         = VarietyClass::hri();
  A.invol_table = UnaryTable{1, 0};
  CHECK(*derive_operations(A).box_table == UnaryTable{0, 1});
}

TEST_CASE("derive_operations is idempotent") {
  for (auto const& A : {c3_hri(), c3_hdp(), b4_hri(), c3_dht(), two_ws5()}) {
    CHECK(derive_operations(A) == A);
  }
}

TEST_CASE("dual implication of the 3-chain") {
  auto A = c3_dht();
  // c -< a = least b with c <= a | b.
  CHECK(A.dimpl(2, 0) == 2);
  CHECK(A.dimpl(2, 1) == 2);
  CHECK(A.dimpl(1, 0) == 1);
  CHECK(A.dimpl(1, 1) == 0);
  CHECK(*A.dualneg_table == UnaryTable{2, 2, 0});
}

TEST_CASE("stored box of a derived class must equal the derived one") {
  auto A      = c3_hri();
  A.box_table = UnaryTable{0, 1, 2};
  CHECK(validate(A).has("box derived"));
}

TEST_CASE("declared level below the inferred one is rejected") {
  // On the 3-chain the level is 1; build a lattice needing level 2 and
  // declare 1.
  std::vector<std::vector<bool>> leq = {
      // 0 < a, b < c < 1 ... a 2 + 2 + 1 shape: 0 < {1, 2} < 3 < 4
      {true, true, true, true, true},
      {false, true, false, true, true},
      {false, false, true, true, true},
      {false, false, false, true, true},
      {false, false, false, false, true},
  };
  auto L          = heyting_from_order("L", leq);
  L.cls           = VarietyClass::hdp(1);
  L.dualneg_table = compute_dual_pseudocomplement(L);
  int level       = infer_level(L);
  L.cls.level     = level;
  CHECK(validate(L).valid);
  if (level > 1) {
    L.cls.level = level - 1;
    CHECK(validate(L).has("dual pseudocomplement level"));
  }
}

TEST_CASE("element profiles of the fixtures") {
  auto p = element_profile(b4_disc());
  CHECK(p.open == ElementSet{0, 3});
  CHECK(p.dense == ElementSet{3});
  CHECK(p.simple);

  auto q = element_profile(c3_simple());
  CHECK(q.open == ElementSet{0, 2});
  CHECK(q.dense == ElementSet{m, 2});
  CHECK(q.regular == ElementSet{0, 2});
  CHECK(q.simple);
  CHECK_FALSE(q.boolean_hreduct);

  auto r = element_profile(b4_prod());
  CHECK(r.open == ElementSet{0, 1, 2, 3});
  CHECK_FALSE(r.simple);
  CHECK(r.boolean_hreduct);
}

TEST_CASE("discriminator term on the fixtures") {
  auto A = b4_disc();
  for (elem a = 0; a < A.n; ++a) {
    for (elem b = 0; b < A.n; ++b) {
      for (elem c = 0; c < A.n; ++c) {
        CHECK(discriminator_eval(A, a, b, c) == (a == b ? c : a));
      }
    }
  }
  CHECK(discriminator_eval(two_ws5(), 0, 1, 1) == 0);
  for (auto const& B : {c3_simple(), b4_prod(), c3_hdp()}) {
    for (elem a = 0; a < B.n; ++a) {
      for (elem c = 0; c < B.n; ++c) CHECK(discriminator_eval(B, a, a, c) == c);
    }
  }
}

TEST_CASE("two-element algebras of every class") {
  for (auto s : {"ws5", "hri", "hdp:1", "hdp:2", "dht:1", "dht:3"}) {
    auto A = two_algebra(VarietyClass::parse(s));
    CHECK(validate(A).valid);
    CHECK(*A.box_table == UnaryTable{0, 1});
  }
  auto D = two_algebra(VarietyClass::dht(1));
  CHECK((*D.dimpl_table)(0, 0) == 0);
  CHECK((*D.dimpl_table)(0, 1) == 0);
  CHECK((*D.dimpl_table)(1, 0) == 1);
  CHECK((*D.dimpl_table)(1, 1) == 0);
  CHECK(*two_algebra(VarietyClass::hri()).invol_table == UnaryTable{1, 0});
}

TEST_CASE("operations unavailable in a class throw class_error") {
  auto A = chain(3);
  CHECK_THROWS_AS(A.box(0), class_error);
  CHECK_THROWS_AS(two_ws5().invol(0), class_error);
  CHECK(A.interior(1) == 1);
}

TEST_CASE("relabelling then canonicalizing is stable") {
  auto A = b4_disc();
  auto B = relabel(A, {0, 2, 1, 3});
  CHECK(canonicalize(B) == A);
  auto C = c3_simple();
  CHECK(canonical_form(C).relabel == std::vector<elem>{0, 1, 2});
}
