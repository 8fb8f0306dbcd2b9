#include <doctest.h>

#include <algorithm>
#include <set>

#include "tridend/series.hpp"
#include "tridend/tree.hpp"

using namespace tridend;

namespace {

PlanarTree T(const char* s) { return PlanarTree::parse(s); }

// Catalan numbers from C_{n+1} = Σ C_i C_{n-i}.
std::vector<long long> catalan(int n) {
  std::vector<long long> c{1};
  for (int m = 1; m <= n; ++m) {
    long long v = 0;
    for (int i = 0; i < m; ++i) v += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    c.push_back(v);
  }
  return c;
}

}  // namespace

TEST_CASE("parse and render round trip") {
  for (const char* s : {"|", "(|,|)", "(|,(|,|),|)", "((|,|),|,|)", "(|,((|,|,|),|))"}) {
    CHECK(T(s).str() == s);
  }
  CHECK(T(" ( | , ( | ,| ) ) ").str() == "(|,(|,|))");
  for (const auto& t : enumerate_trees(0, 5)) CHECK(PlanarTree::parse(t.str()) == t);
}

TEST_CASE("malformed literals are rejected") {
  for (const char* s : {"", "(|)", "(|,|", "|,|", "(|,|))", "x", "(|,,|)", "()"}) {
    CHECK_THROWS_AS(PlanarTree::parse(s), ParseError);
  }
}

TEST_CASE("graft") {
  const PlanarTree bar;
  CHECK(PlanarTree::graft({bar, bar}).str() == "(|,|)");
  CHECK(PlanarTree::graft({bar, T("(|,|)"), bar}).str() == "(|,(|,|),|)");
  CHECK(PlanarTree::graft({T("(|,|)"), bar, bar}).str() == "((|,|),|,|)");
  CHECK_THROWS_AS(PlanarTree::graft({bar}), std::invalid_argument);
  CHECK_THROWS_AS(PlanarTree::graft({}), std::invalid_argument);
}

TEST_CASE("leaf counts and degree") {
  CHECK(PlanarTree().leaves() == 1);
  CHECK(PlanarTree().degree() == 0);
  CHECK(T("(|,(|,|),|)").leaves() == 4);
  CHECK(T("(|,(|,|),|)").degree() == 3);
  CHECK(corolla(4).str() == "(|,|,|,|,|)");
  CHECK(generator() == T("(|,|)"));
}

TEST_CASE("enumeration in canonical order") {
  CHECK(enumerate_trees(0) == std::vector<PlanarTree>{PlanarTree()});
  auto t2 = enumerate_trees(2);
  REQUIRE(t2.size() == 3);
  CHECK(t2[0].str() == "((|,|),|)");
  CHECK(t2[1].str() == "(|,(|,|))");
  CHECK(t2[2].str() == "(|,|,|)");
  const std::vector<std::size_t> expected{1, 3, 11, 45, 197, 903, 4279};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_trees(n).size() == expected[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("tree counts agree with the Schröder recurrence") {
  for (int n = 0; n <= 9; ++n) CHECK(mpz_class(enumerate_trees(n).size()) == small_schroeder(n));
}

TEST_CASE("binary trees are counted by Catalan numbers") {
  auto c = catalan(8);
  for (int n = 0; n <= 8; ++n) {
    auto trees = enumerate_trees(n);
    auto count = std::count_if(trees.begin(), trees.end(), [](const PlanarTree& t) { return is_binary(t); });
    CHECK(count == c[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("canonical order is a strict total order") {
  for (int n = 0; n <= 6; ++n) {
    auto trees = enumerate_trees(n);
    std::set<std::string> distinct;
    for (const auto& t : trees) distinct.insert(t.str());
    CHECK(distinct.size() == trees.size());
    CHECK(std::is_sorted(trees.begin(), trees.end()));
    for (std::size_t i = 0; i + 1 < trees.size(); ++i) {
      CHECK(trees[i] < trees[i + 1]);
      CHECK_FALSE(trees[i + 1] < trees[i]);
    }
  }
  // Transitivity and antisymmetry on a small full sample.
  auto sample = enumerate_trees(0, 3);
  for (const auto& a : sample) {
    for (const auto& b : sample) {
      CHECK(((a < b) + (b < a) + (a == b)) == 1);
      for (const auto& c : sample) {
        if (a < b && b < c) CHECK(a < c);
      }
    }
  }
  CHECK(T("(|,|,|)") < T("((|,|),|,|)"));
}

TEST_CASE("comb decompositions") {
  using F = std::vector<Forest>;
  const PlanarTree bar;
  CHECK(right_comb_decomposition(T("(|,|)")) == F{{bar}});
  CHECK(right_comb_decomposition(T("(|,(|,|))")) == F{{bar}, {bar}});
  CHECK(right_comb_decomposition(T("((|,|),|)")) == F{{T("(|,|)")}});
  CHECK(left_comb_decomposition(T("(|,|)")) == F{{bar}});
  CHECK(left_comb_decomposition(T("((|,|),|)")) == F{{bar}, {bar}});
  CHECK(left_comb_decomposition(T("(|,(|,|))")) == F{{T("(|,|)")}});
  CHECK_THROWS_AS(right_comb_decomposition(bar), std::invalid_argument);
  CHECK_THROWS_AS(left_comb_decomposition(bar), std::invalid_argument);
  for (const auto& t : enumerate_trees(1, 6)) {
    CHECK(assemble_right_comb(right_comb_decomposition(t)) == t);
    CHECK(assemble_left_comb(left_comb_decomposition(t)) == t);
  }
}

TEST_CASE("is_binary") {
  CHECK(is_binary(PlanarTree()));
  CHECK_FALSE(is_binary(T("(|,|,|)")));
  CHECK(is_binary(T("((|,|),|)")));
  CHECK_FALSE(is_binary(T("((|,|,|),|)")));
}
