#include <doctest.h>

#include "tridend/primitives.hpp"

using namespace tridend;

namespace {

PlanarTree T(const char* s) { return PlanarTree::parse(s); }

bool annihilated(PrimKind kind, const TreeVector& v) {
  const bool full = reduced_coproduct(v).empty();
  const bool l = reduced_coproduct_left(v).empty();
  const bool r = reduced_coproduct_right(v).empty();
  switch (kind) {
    case PrimKind::Coass: return full;
    case PrimKind::Codend: return l && r;
    case PrimKind::Left: return l;
    case PrimKind::Right: return r;
  }
  return false;
}

}  // namespace

TEST_CASE("small primitive spaces") {
  auto d1 = primitive_basis(PrimKind::Codend, 1);
  REQUIRE(d1.dim() == 1);
  CHECK(d1.vectors[0] == vec(generator()));
  auto d2 = primitive_basis(PrimKind::Codend, 2);
  REQUIRE(d2.dim() == 1);
  CHECK(d2.vectors[0] == vec(T("(|,|,|)")));

  auto c2 = primitive_basis(PrimKind::Coass, 2);
  CHECK(c2.dim() == 2);
  const TreeVector diff = vec(T("((|,|),|)")) - vec(T("(|,(|,|))"));
  CHECK(in_span(c2.vectors, diff));
  CHECK(in_span(c2.vectors, vec(T("(|,|,|)"))));
}

TEST_CASE("primitive dimensions") {
  const std::vector<int> coass{1, 2, 6, 22};
  const std::vector<int> codend{1, 1, 2, 6, 22};
  for (int n = 1; n <= 4; ++n) CHECK(primitive_basis(PrimKind::Coass, n).dim() == coass[n - 1]);
  for (int n = 1; n <= 5; ++n) CHECK(primitive_basis(PrimKind::Codend, n).dim() == codend[n - 1]);
}

TEST_CASE("basis vectors are primitive and independent") {
  for (PrimKind kind : {PrimKind::Coass, PrimKind::Codend, PrimKind::Left, PrimKind::Right}) {
    for (int n = 1; n <= 4; ++n) {
      auto b = primitive_basis(kind, n);
      CHECK(b.kind == kind);
      CHECK(b.degree == n);
      CHECK(rank(b.vectors) == b.dim());
      for (const auto& v : b.vectors) CHECK(annihilated(kind, v));
    }
  }
}

TEST_CASE("kernels are deterministic") {
  auto a = primitive_basis(PrimKind::Coass, 3);
  auto b = primitive_basis(PrimKind::Coass, 3);
  CHECK(a.vectors == b.vectors);
}

TEST_CASE("theta") {
  auto t1 = theta(primitive_basis(PrimKind::Coass, 1));
  REQUIRE(t1.size() == 1);
  CHECK(t1[0] == vec(T("(|,|,|)")));
  auto t2 = theta(primitive_basis(PrimKind::Coass, 2));
  auto target = primitive_basis(PrimKind::Codend, 3);
  CHECK(t2.size() == 2);
  CHECK(rank(t2) == target.dim());
  for (const auto& v : t2) CHECK(in_span(target.vectors, v));
  CHECK_THROWS(theta(primitive_basis(PrimKind::Codend, 2)));
}

TEST_CASE("kind names and the degree cap") {
  for (PrimKind kind : {PrimKind::Coass, PrimKind::Codend, PrimKind::Left, PrimKind::Right}) {
    CHECK(parse_kind(kind_name(kind)) == kind);
  }
  CHECK_THROWS(parse_kind("nope"));
  CHECK_THROWS_AS(primitive_basis(PrimKind::Coass, kDefaultDegreeCap + 1), std::invalid_argument);
  CHECK_THROWS(primitive_basis(PrimKind::Coass, 0));
}

TEST_CASE("primitive trees and the table") {
  for (int n = 1; n <= 5; ++n) {
    auto trees = primitive_trees(n);
    REQUIRE(trees.size() == 1);
    CHECK(trees[0] == corolla(n));
  }
  auto table = dimension_table(3);
  REQUIRE(table.size() == 3);
  CHECK(table[2].degree == 3);
  CHECK(table[2].dim_a == 11);
  CHECK(table[2].coass == 6);
  CHECK(table[2].codend == 2);
  CHECK(check_primitives(4).ok());
}
