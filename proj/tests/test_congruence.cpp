#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "hdv/congruence.hpp"
#include "hdv/morphism.hpp"
#include "oracles.hpp"

using namespace hdv;
using namespace fixtures;

namespace {

std::vector<ElementSet> sorted_blocks(Congruence const& c) { return c.blocks(); }

}  // namespace

TEST_CASE("generated h-filters") {
  CHECK(generated_hfilter(c3_simple(), {m}).carrier == ElementSet{m, 2});
  CHECK(generated_hfilter(b4_disc(), {}).carrier == ElementSet{3});
  CHECK(generated_hfilter(b4_prod(), {at, bt}).carrier == ElementSet{0, 1, 2, 3});
  CHECK(is_hfilter(c3_simple(), {m, 2}));
  CHECK_FALSE(is_congruence_filter(c3_simple(), {m, 2}));
}

TEST_CASE("generated congruence filters") {
  CHECK(generated_congfilter(c3_simple(), {m}).carrier == ElementSet{0, 1, 2});
  CHECK(generated_congfilter(b4_prod(), {at}).carrier == ElementSet{at, 3});
  for (auto const& A : {two_ws5(), c3_simple(), b4_disc(), b4_prod()}) {
    CHECK(generated_congfilter(A, {A.top()}).carrier == ElementSet{A.top()});
    CHECK(generated_congfilter(A, {}).carrier == ElementSet{A.top()});
  }
}

TEST_CASE("single generators of congruence filters") {
  CHECK(principal_generator(b4_prod(), {{at, 3}}) == at);
  CHECK(principal_generator(b4_disc(), {{3}}) == 3);
  CHECK(principal_generator(c3_simple(), {{0, 1, 2}}) == 0);
}

TEST_CASE("filters and partitions") {
  auto A     = b4_prod();
  auto theta = to_congruence(A, {{at, 3}});
  CHECK(sorted_blocks(theta) == std::vector<ElementSet>{{0, bt}, {at, 3}});
  CHECK(to_congruence(A, {{3}}).is_identity());
  CHECK(to_congruence(A, {{0, 1, 2, 3}}).is_all());
  CHECK(to_filter(A, theta).carrier == ElementSet{at, 3});
  CHECK_THROWS_AS(to_congruence(c3_simple(), {{m, 2}}), structure_error);
}

TEST_CASE("principal congruences") {
  auto A = b4_prod();
  CHECK(sorted_blocks(principal_congruence(A, at, 3)) == std::vector<ElementSet>{{0, bt}, {at, 3}});
  CHECK(principal_congruence(A, 2, 2).is_identity());
  CHECK(principal_congruence(b4_disc(), at, 3).is_all());
}

TEST_CASE("principal congruences match the partition closure") {
  for (auto const& A : {two_ws5(), c3_simple(), b4_disc(), b4_prod(), c3_hri(), c3_hdp(),
                        b4_hri(), c3_dht(), product(two_ws5(), c3_simple())}) {
    for (elem a = 0; a < A.n; ++a) {
      for (elem b = 0; b < A.n; ++b) {
        auto theta = principal_congruence(A, a, b);
        auto rel   = oracle::congruence_closure(A, a, b);
        for (elem x = 0; x < A.n; ++x) {
          for (elem y = 0; y < A.n; ++y) CHECK(theta.related(x, y) == rel[x][y]);
        }
      }
    }
  }
}

TEST_CASE("quotients") {
  auto q = quotient(b4_prod(), to_congruence(b4_prod(), {{at, 3}}));
  CHECK(q.algebra == two_ws5());
  CHECK(q.projection == std::vector<elem>{0, 1, 0, 1});
  auto A  = c3_simple();
  auto id = quotient(A, Congruence::identity(A.n));
  CHECK(id.algebra == A);
  CHECK(quotient(A, Congruence::all(A.n)).algebra.n == 1);
  CHECK_THROWS_AS(quotient(A, Congruence(std::vector<int>{0, 0, 1})), theorem_violation);
}

TEST_CASE("products") {
  CHECK(product(two_ws5(), two_ws5()) == b4_prod());
  auto one = trivial_algebra(VarietyClass::ws5());
  CHECK(product(c3_simple(), one) == c3_simple());
  auto P = product_with_coords(two_ws5(), c3_simple());
  CHECK(P.algebra.n == 6);
  ElementSet open;
  for (elem a = 0; a < 6; ++a) {
    if (P.algebra.box(a) == a) open.push_back(a);
  }
  REQUIRE(open.size() == 4);
  for (elem a : open) CHECK(P.coords[a].second != m);
  CHECK(validate(P.algebra).valid);
  CHECK_THROWS_AS(product(two_ws5(), c3_hri()), class_error);
}

TEST_CASE("factor complements") {
  auto A     = b4_prod();
  auto theta = to_congruence(A, {{at, 3}});
  auto pair  = factor_complement(A, theta);
  REQUIRE(pair);
  CHECK(to_filter(A, pair->theta_prime).carrier == ElementSet{bt, 3});
  CHECK(pair->left == two_ws5());
  CHECK(pair->right == two_ws5());

  auto C  = c3_simple();
  auto pc = factor_complement(C, Congruence::identity(C.n));
  REQUIRE(pc);
  CHECK(pc->theta_prime.is_all());
  CHECK(pc->right.n == 1);
}

TEST_CASE("decomposition into simple factors") {
  auto d1 = decompose_simples(b4_prod());
  REQUIRE(d1.size() == 2);
  CHECK(d1[0] == two_ws5());
  CHECK(d1[1] == two_ws5());
  CHECK(decompose_simples(b4_disc()) == std::vector<FiniteAlgebra>{b4_disc()});
  auto d3 = decompose_simples(product(two_ws5(), c3_simple()));
  REQUIRE(d3.size() == 2);
  CHECK(d3[0] == two_ws5());
  CHECK(d3[1] == c3_simple());
}

TEST_CASE("Boolean projections") {
  CHECK(boolean_projection(b4_disc()).quotient.algebra == b4_disc());
  CHECK(boolean_projection(c3_simple()).quotient.algebra.n == 1);
  CHECK(boolean_projection(b4_prod()).quotient.algebra == b4_prod());
  auto P = product(b4_prod(), c3_simple());
  auto bp = boolean_projection(P);
  CHECK(bp.quotient.algebra == b4_prod());
}

TEST_CASE("congruence lattice operations") {
  auto A  = b4_prod();
  auto t1 = to_congruence(A, {{at, 3}});
  auto t2 = to_congruence(A, {{bt, 3}});
  CHECK(meet(t1, t2).is_identity());
  CHECK(join(t1, t2).is_all());
  CHECK(permute(t1, t2));
  CHECK(all_congruence_filters(A).size() == 4);
  CHECK(all_congruence_filters(b4_disc()).size() == 2);
  CHECK(is_simple(c3_simple()));
}
