#include <doctest.h>

#include "tridend/dual.hpp"

using namespace tridend;

namespace {

PlanarTree T(const char* s) { return PlanarTree::parse(s); }

}  // namespace

TEST_CASE("lightning splits") {
  const PlanarTree y = generator();
  const PlanarTree bar;
  for (const auto& t : enumerate_trees(0, 4)) {
    auto first = lightning_split(t, 1);
    CHECK(first.left == bar);
    CHECK(first.right == t);
    auto last = lightning_split(t, t.leaves());
    CHECK(last.left == t);
    CHECK(last.right == bar);
  }
  auto s = lightning_split(T("(|,(|,|))"), 2);
  CHECK(s.left == y);
  CHECK(s.right == y);
  CHECK_THROWS(lightning_split(y, 0));
  CHECK_THROWS(lightning_split(y, 3));
}

TEST_CASE("dual coproduct and its pieces") {
  const PlanarTree y = generator();
  const PlanarTree bar;
  CHECK(dual_coproduct(y) == tens(y, bar) + tens(bar, y));
  CHECK(dual_coproduct_prec(y) == tens(y, bar));
  CHECK(dual_coproduct_succ(y) == tens(bar, y));
  CHECK(dual_coproduct_mid(y).empty());
  CHECK(dual_coproduct_mid(T("(|,|,|)")) == tens(y, y));
  CHECK(reduced_dual_coproduct_piece(Op::Left, T("(|,(|,|))")) == tens(y, y));
  CHECK(reduced_dual_coproduct_piece(Op::Right, T("((|,|),|)")) == tens(y, y));
  CHECK_THROWS_AS(dual_coproduct_prec(bar), DomainError);
  for (const auto& t : enumerate_trees(1, 5)) {
    CHECK(dual_coproduct_prec(t) + dual_coproduct_mid(t) + dual_coproduct_succ(t) == dual_coproduct(t));
  }
}

TEST_CASE("dual product") {
  const PlanarTree y = generator();
  const PlanarTree bar;
  CHECK(dual_product(bar, T("(|,(|,|))")) == vec("(|,(|,|))"));
  CHECK(dual_product(y, y) == parse_vector("((|,|),|) + (|,(|,|))"));

  // Coefficient of w counts the cuts of w with G = Y and P = (|,|,|).
  const PlanarTree c = T("(|,|,|)");
  TreeVector expected;
  for (const auto& w : enumerate_trees(3)) {
    int count = 0;
    for (const auto& cut : enumerate_admissible_cuts(w)) {
      auto parts = cut_parts(w, cut);
      if (parts.fallen == vec(y) && parts.trunk == c) ++count;
    }
    if (count) expected.add(w, count);
  }
  CHECK(!expected.empty());
  CHECK(dual_product(y, c) == expected);
}

TEST_CASE("pairing of pieces with products") {
  const PlanarTree y = generator();
  const PlanarTree c = T("(|,|,|)");
  CHECK(pairing(dual_coproduct_mid(c), tens(y, y)) == pairing(vec(c), mid(vec(y), vec(y))));
  CHECK(pairing(dual_coproduct_mid(c), tens(y, y)) == 1);
}

TEST_CASE("dual structure") {
  CHECK(check_dual_adjointness(4).ok());
  CHECK(check_dual_relations(4).ok());
  CHECK(check_dual_structure(3).ok());
}

TEST_CASE("moving middle lightnings into the left piece breaks adjointness") {
  LightningClassifier wrong = [](const PlanarTree& t, int m) {
    Op p = lightning_piece(t, m);
    return p == Op::Mid ? Op::Left : p;
  };
  CHECK_FALSE(check_dual_adjointness(3, wrong).ok());
}
