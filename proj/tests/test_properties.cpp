// Exhaustive invariants over the catalog at small sizes.

#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "hdv/decision.hpp"
#include "hdv/morphism.hpp"
#include "hdv/profile.hpp"
#include "oracles.hpp"

using namespace hdv;

namespace {

std::vector<FiniteAlgebra> const& box_corpus(int max_size) {
  static std::map<int, std::vector<FiniteAlgebra>> cache;
  auto it = cache.find(max_size);
  if (it == cache.end()) {
    it = cache.emplace(max_size, corpus::algebras(corpus::box_classes(max_size), max_size)).first;
  }
  return it->second;
}

std::vector<elem> reversed_linear_labels(FiniteAlgebra const& A) {
  // Some other bijection fixing 0 and top that respects the order: the
  // last linear extension found.
  std::vector<elem> last;
  for_each_linear_extension(A, [&](std::vector<elem> const& order) {
    last = order;
    return true;
  });
  std::vector<elem> perm(A.n);
  for (elem k = 0; k < A.n; ++k) perm[last[k]] = k;
  return perm;
}

}  // namespace

TEST_CASE("open elements form a Boolean subalgebra") {
  for (auto const& A : box_corpus(8)) {
    auto open = element_profile(A).open;
    for (elem a : open) {
      CHECK(contains(open, A.neg(a)));
      for (elem b : open) {
        CHECK(contains(open, A.meet(a, b)));
        CHECK(contains(open, A.join(a, b)));
      }
    }
  }
}

TEST_CASE("filters and congruences correspond") {
  for (auto const& A : box_corpus(8)) {
    for (auto const& F : all_congruence_filters(A)) {
      auto theta = to_congruence(A, F);
      CHECK(to_filter(A, theta) == F);
      CHECK(theta.blocks()[theta.block(A.top())] == F.carrier);
      CHECK(is_compatible(A, theta));
    }
    for (elem a = 0; a < A.n; ++a) {
      for (elem b = 0; b < A.n; ++b) {
        auto theta = principal_congruence(A, a, b);
        CHECK(to_congruence(A, to_filter(A, theta)) == theta);
      }
    }
  }
}

TEST_CASE("congruence filters are exactly the closed filters") {
  for (auto const& A : box_corpus(5)) {
    std::vector<CongruenceFilter> brute;
    for (std::uint32_t mask = 1; mask < (1u << A.n); ++mask) {
      ElementSet S;
      for (elem a = 0; a < A.n; ++a) {
        if ((mask >> a) & 1u) S.push_back(a);
      }
      if (oracle::filter_closure(A, S) == S) brute.push_back({S});
    }
    auto got = all_congruence_filters(A);
    std::sort(brute.begin(), brute.end(), [](auto const& x, auto const& y) {
      return x.carrier.size() != y.carrier.size() ? x.carrier.size() < y.carrier.size()
                                                  : x.carrier < y.carrier;
    });
    CHECK(got == brute);
  }
}

TEST_CASE("homomorphism counts do not depend on labelling") {
  auto const& all = box_corpus(5);
  for (auto const& A : all) {
    for (auto const& B : all) {
      if (A.cls != B.cls) continue;
      auto A2 = relabel(A, reversed_linear_labels(A));
      auto B2 = relabel(B, reversed_linear_labels(B));
      CHECK(homs(A, B, HomMode::count).count == homs(A2, B2, HomMode::count).count);
    }
  }
}

TEST_CASE("homomorphisms match brute force") {
  auto const& all = box_corpus(4);
  for (auto const& A : all) {
    for (auto const& B : all) {
      if (A.cls != B.cls) continue;
      CHECK(homs(A, B, HomMode::count).count == oracle::all_homs(A, B).size());
    }
  }
}

TEST_CASE("alpha does not depend on labelling and detects quotients onto 2") {
  for (auto const& A : box_corpus(6)) {
    if (A.trivial()) continue;
    bool alpha = eval_alpha(A);
    CHECK(eval_alpha(relabel(A, reversed_linear_labels(A))) == alpha);
    auto two          = two_algebra(A.cls);
    bool some_two     = false;
    for (elem a = 0; a < A.n && !some_two; ++a) {
      for (elem b = 0; b < A.n && !some_two; ++b) {
        some_two = quotient(A, principal_congruence(A, a, b)).algebra == two;
      }
    }
    CHECK(some_two == alpha);
  }
}

TEST_CASE("nontrivial subalgebras of mh-full algebras are mh-full") {
  for (auto const& A : box_corpus(8)) {
    if (A.trivial() || !mh_full(A).full) continue;
    for (std::uint32_t mask = 0; mask < (1u << A.n); ++mask) {
      ElementSet S;
      for (elem a = 0; a < A.n; ++a) {
        if ((mask >> a) & 1u) S.push_back(a);
      }
      if (subalgebra_closure(A, S) != S) continue;
      auto sub = subalgebra(A, S);
      CHECK(find_hom(sub.algebra, two_algebra(A.cls), true).has_value());
    }
  }
}

TEST_CASE("element criterion witnesses have box zero") {
  for (auto const& A : box_corpus(8)) {
    if (auto a = element_criterion(A)) {
      CHECK(A.box(*a) == A.bottom());
      CHECK(A.box(A.neg(*a)) == A.bottom());
    }
  }
}

TEST_CASE("mh-full algebras are retracts of their products") {
  auto const& all = box_corpus(6);
  for (auto const& B : all) {
    if (B.trivial() || !mh_full(B).full) continue;
    for (auto const& C : all) {
      if (C.cls != B.cls || B.n * C.n > 12) continue;
      CHECK(is_retract(product(B, C), B).has_value());
    }
  }
}

TEST_CASE("every subset generates the closure-oracle filter") {
  for (auto const& A : box_corpus(5)) {
    for (std::uint32_t mask = 0; mask < (1u << A.n); ++mask) {
      ElementSet S;
      for (elem a = 0; a < A.n; ++a) {
        if ((mask >> a) & 1u) S.push_back(a);
      }
      CHECK(generated_congfilter(A, S).carrier == oracle::filter_closure(A, S));
    }
  }
}
