#include <doctest.h>

#include "tridend/coproduct.hpp"

using namespace tridend;

namespace {

PlanarTree T(const char* s) { return PlanarTree::parse(s); }
TensorVector TV(const PlanarTree& a, const PlanarTree& b) { return tens(a, b); }

// Internal edges as full paths to their lower vertex.
void internal_edges(const PlanarTree& t, std::vector<int>& path, std::vector<std::vector<int>>& out) {
  auto kids = t.children();
  for (int i = 0; i < static_cast<int>(kids.size()); ++i) {
    if (kids[static_cast<std::size_t>(i)].is_leaf()) continue;
    path.push_back(i);
    out.push_back(path);
    internal_edges(kids[static_cast<std::size_t>(i)], path, out);
    path.pop_back();
  }
}

bool is_prefix(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// Nonempty subsets of internal edges with no two on one path.
int count_edge_cuts(const PlanarTree& t) {
  std::vector<std::vector<int>> edges;
  std::vector<int> path;
  internal_edges(t, path, edges);
  int count = 0;
  for (unsigned mask = 1; mask < (1u << edges.size()); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      for (std::size_t j = 0; j < edges.size() && ok; ++j) {
        if (i != j && (mask >> i & 1) && (mask >> j & 1) && is_prefix(edges[i], edges[j])) ok = false;
      }
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("admissible cuts") {
  CHECK(enumerate_admissible_cuts(generator()).size() == 2);
  CHECK(enumerate_admissible_cuts(T("(|,|,|)")).size() == 2);
  auto cuts = enumerate_admissible_cuts(T("(|,(|,|))"));
  REQUIRE(cuts.size() == 3);
  CHECK(cuts.front() == AdmissibleCut::empty());
  CHECK(cuts.back() == AdmissibleCut::total());
  CHECK(enumerate_admissible_cuts(PlanarTree()).size() == 1);
  for (const auto& t : enumerate_trees(1, 5)) {
    CHECK(static_cast<int>(enumerate_admissible_cuts(t).size()) == count_edge_cuts(t) + 2);
  }
}

TEST_CASE("parts of a cut") {
  const PlanarTree y = generator();
  const PlanarTree t = T("(|,(|,|))");
  auto parts = cut_parts(t, enumerate_admissible_cuts(t)[1]);
  CHECK(parts.fallen == vec(y));
  CHECK(parts.trunk == y);
  auto empty = cut_parts(t, AdmissibleCut::empty());
  CHECK(empty.fallen == vec(PlanarTree()));
  CHECK(empty.trunk == t);
  auto total = cut_parts(t, AdmissibleCut::total());
  CHECK(total.fallen == vec(t));
  CHECK(total.trunk == PlanarTree());

  // Three fallen components Y, Y and (|,|,|), multiplied left to right.
  const PlanarTree three = T("((|,|),(|,|),(|,|,|))");
  AdmissibleCut all{AdmissibleCut::Kind::Edges, {{{}, 0}, {{}, 1}, {{}, 2}}};
  auto p = cut_parts(three, all);
  CHECK(p.fallen == star(star(vec(y), vec(y)), vec(T("(|,|,|)"))));
  CHECK(p.trunk == T("(|,|,|)"));

  CHECK_THROWS_AS(cut_parts(t, {AdmissibleCut::Kind::Edges, {{{}, 0}}}), std::invalid_argument);
  const PlanarTree deep = T("(|,(|,(|,|)))");
  CHECK_THROWS_AS(cut_parts(deep, {AdmissibleCut::Kind::Edges, {{{}, 1}, {{1}, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(cut_parts(deep, {AdmissibleCut::Kind::Edges, {}}), std::invalid_argument);
}

TEST_CASE("coproduct on small trees") {
  const PlanarTree y = generator();
  const PlanarTree bar;
  CHECK(coproduct(PlanarTree()) == TV(bar, bar));
  CHECK(coproduct(y) == TV(y, bar) + TV(bar, y));
  const PlanarTree c = T("(|,|,|)");
  CHECK(coproduct(c) == TV(c, bar) + TV(bar, c));
  const PlanarTree l = T("(|,(|,|))");
  CHECK(coproduct(l) == TV(l, bar) + TV(bar, l) + TV(y, y));
  CHECK(reduced_coproduct(l) == TV(y, y));
  CHECK(reduced_coproduct(c).empty());
  CHECK(counit(vec(bar) + vec(y)) == 1);
}

TEST_CASE("half coproducts") {
  const PlanarTree y = generator();
  const PlanarTree l = T("(|,(|,|))");
  const PlanarTree r = T("((|,|),|)");
  CHECK(reduced_coproduct_left(l) == TV(y, y));
  CHECK(reduced_coproduct_left(r).empty());
  CHECK(reduced_coproduct_right(r) == TV(y, y));
  CHECK(reduced_coproduct_right(l).empty());
  CHECK(reduced_coproduct_left(y).empty());
  CHECK(reduced_coproduct_right(y).empty());
  CHECK(reduced_coproduct_left(vec(r) - vec(l)) == Rational(-1) * TV(y, y));
  CHECK_THROWS(reduced_coproduct_left(PlanarTree()));
  CHECK_THROWS(reduced_coproduct_right(PlanarTree()));

  // Y≺Y and Y·Y.
  CHECK(reduced_coproduct_left(left(vec(y), vec(y))) == TV(y, y));
  CHECK(reduced_coproduct_left(mid(vec(y), vec(y))).empty());

  for (const auto& t : enumerate_trees(1, 5)) {
    CHECK(coproduct_left(t) + coproduct_right(t) == coproduct(t));
  }
}

TEST_CASE("bialgebra and (3,2) relations") {
  CHECK(check_bialgebra(2).ok());
  CHECK(check_bialgebra(4).ok());
  CHECK(check_32_relations(4).ok());
  CHECK(check_coproduct_identities(4).ok());
}

TEST_CASE("dropping a term breaks the bialgebra checks") {
  const PlanarTree l = T("(|,(|,|))");
  Coproduct broken = [l](const PlanarTree& t) {
    TensorVector d = coproduct(t);
    if (t == l) d.add({generator(), generator()}, -1);
    return d;
  };
  CHECK_FALSE(check_bialgebra(3, broken).ok());
}

TEST_CASE("primitive trees are the corollas") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<PlanarTree> found;
    for (const auto& t : enumerate_trees(n)) {
      if (reduced_coproduct(t).empty()) found.push_back(t);
    }
    REQUIRE(found.size() == 1);
    CHECK(found[0] == corolla(n));
  }
}
