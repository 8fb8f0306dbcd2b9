#include <doctest.h>

#include "tridend/quotient.hpp"

using namespace tridend;

namespace {

PlanarTree T(const char* s) { return PlanarTree::parse(s); }

// Binary trees with n internal nodes, built by splitting n-1 between the
// two subtrees.
long long count_binary(int n) {
  if (n == 0) return 1;
  long long total = 0;
  for (int i = 0; i < n; ++i) total += count_binary(i) * count_binary(n - 1 - i);
  return total;
}

}  // namespace

TEST_CASE("projection") {
  CHECK(project_lr(vec(T("(|,|,|)"))).empty());
  CHECK(project_lr(vec(T("((|,|),|)"))) == vec(T("((|,|),|)")));
  const TreeVector y = vec(generator());
  CHECK(project_lr(star(y, y)) == parse_vector("((|,|),|) + (|,(|,|))"));
}

TEST_CASE("quotient product") {
  const PlanarTree y = generator();
  CHECK(lr_product(y, y) == parse_vector("((|,|),|) + (|,(|,|))"));
  CHECK(lr_product(PlanarTree(), T("(|,(|,|))")) == vec(T("(|,(|,|))")));
  CHECK(lr_product(T("(|,(|,|))"), PlanarTree()) == vec(T("(|,(|,|))")));
  CHECK_THROWS(lr_product(T("(|,|,|)"), y));
}

TEST_CASE("quotient coproduct") {
  const PlanarTree y = generator();
  const PlanarTree bar;
  CHECK(lr_coproduct(y) == tens(y, bar) + tens(bar, y));
  for (const char* s : {"(|,(|,|))", "((|,|),|)"}) {
    const PlanarTree t = T(s);
    CHECK(lr_coproduct(t) == tens(t, bar) + tens(bar, t) + tens(y, y));
    CHECK(lr_coproduct_recursive(t) == lr_coproduct(t));
  }
  CHECK_THROWS(lr_coproduct(T("(|,|,|)")));
}

TEST_CASE("binary trees are counted by Catalan numbers") {
  for (int n = 0; n <= 6; ++n) {
    long long binary = 0;
    for (const auto& t : enumerate_trees(n)) binary += is_binary(t);
    CHECK(binary == count_binary(n));
  }
}

TEST_CASE("biideal and quotient laws") {
  CHECK(check_biideal(4).ok());
  CHECK(check_lr_formulas(4).ok());
}

TEST_CASE("the standard reading of the recursive product matches") {
  auto cmp = compare_lr_readings(4);
  CHECK(cmp.standard.ok());
  CHECK_FALSE(cmp.printed.ok());
  CHECK(reading_name(LrReading::Printed) != reading_name(LrReading::Standard));
}
