#include <doctest.h>

#include <random>

#include "tridend/linear.hpp"

using namespace tridend;

namespace {

PlanarTree T(const char* s) { return PlanarTree::parse(s); }

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

TreeVector random_vector(std::mt19937& rng, const std::vector<PlanarTree>& basis, int terms) {
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  TreeVector v;
  for (int i = 0; i < terms; ++i) v.add(basis[pick(rng)], random_rational(rng));
  return v;
}

}  // namespace

TEST_CASE("module operations") {
  const TreeVector y = vec(generator());
  CHECK(y + TreeVector() == y);
  CHECK(Rational(2) * y + Rational(3) * y == Rational(5) * y);
  CHECK((y - y).empty());
  CHECK((y - y).size() == 0);
  CHECK((Rational(0) * y).empty());
  CHECK((-y).coeff(generator()) == -1);
}

TEST_CASE("vector literals") {
  TreeVector v = parse_vector("1*(|,|,|) + -1/2*((|,|),|)");
  CHECK(v.coeff(T("(|,|,|)")) == 1);
  CHECK(v.coeff(T("((|,|),|)")) == Rational(-1, 2));
  CHECK(format(v) == "-1/2*((|,|),|) + 1*(|,|,|)");
  CHECK(parse_vector(format(v)) == v);
  CHECK(parse_vector("(|,|)") == vec(generator()));
  CHECK(parse_vector("2/4*(|,|) - (|,|)") == Rational(-1, 2) * vec(generator()));
  CHECK(parse_vector("3*| − 1*|") == Rational(2) * vec(PlanarTree()));
  CHECK(parse_vector("0").empty());
  CHECK(format(TreeVector()) == "0");
  for (const char* bad : {"", "1*", "1/0*(|,|)", "(|,|) (|,|)", "2 (|,|)", "1*(|,|"}) {
    CHECK_THROWS_AS(parse_vector(bad), ParseError);
  }
  CHECK(format(tens(generator(), PlanarTree())) == "1*(|,|)⊗|");
}

TEST_CASE("pairing") {
  CHECK(pairing(vec("(|,|)"), vec("(|,|)")) == 1);
  CHECK(pairing(vec("(|,|,|)"), vec("((|,|),|)")) == 0);
  // The three degree-2 trees, each once.
  const TreeVector yy = parse_vector("((|,|),|) + (|,(|,|)) + (|,|,|)");
  CHECK(pairing(vec("(|,(|,|))"), yy) == 1);

  std::mt19937 rng(20240611);
  const auto basis = enumerate_trees(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    TreeVector a = random_vector(rng, basis, 6);
    TreeVector b = random_vector(rng, basis, 6);
    TreeVector c = random_vector(rng, basis, 6);
    Rational s = random_rational(rng);
    CHECK(pairing(a, b) == pairing(b, a));
    CHECK(pairing(a + s * b, c) == pairing(a, c) + s * pairing(b, c));
  }
}

TEST_CASE("kernel basis on small matrices") {
  CHECK(kernel_basis(SparseMatrix::identity(3)).empty());
  CHECK(kernel_basis(SparseMatrix(2, 3)).size() == 3);

  // Reduced coproduct on degree 2 by hand: ((|,|),|) and (|,(|,|)) both go
  // to Y⊗Y, (|,|,|) to 0.
  SparseMatrix m(1, 3);
  m.set(0, 0, 1);
  m.set(0, 1, 1);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 2);
  CHECK(k[0] == std::vector<Rational>{-1, 1, 0});
  CHECK(k[1] == std::vector<Rational>{0, 0, 1});
}

TEST_CASE("rank-nullity and kernel vectors on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> size(1, 9);
  std::bernoulli_distribution sparse(0.35);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = size(rng);
    const int cols = size(rng);
    SparseMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        if (sparse(rng)) m.set(r, c, random_rational(rng));
      }
    }
    // Duplicate a combination of rows so that rank deficiency shows up.
    if (rows > 1) {
      SparseMatrix extra(1, cols);
      for (int c = 0; c < cols; ++c) extra.set(0, c, m.at(0, c) * 2 - m.at(1, c));
      m.append_rows(extra);
    }
    auto kernel = kernel_basis(m);
    CHECK(rank(m) + static_cast<int>(kernel.size()) == cols);
    for (const auto& v : kernel) {
      for (const auto& x : m.apply(v)) CHECK(x == 0);
    }
  }
}

TEST_CASE("rank and span of tree vectors") {
  const TreeVector a = parse_vector("((|,|),|) - (|,(|,|))");
  const TreeVector b = vec("(|,|,|)");
  CHECK(rank({a, b}) == 2);
  CHECK(rank({a, b, a + b}) == 2);
  CHECK(in_span({a, b}, Rational(3) * a - b));
  CHECK_FALSE(in_span({a, b}, vec("((|,|),|)")));
  CHECK(rank(std::vector<TreeVector>{}) == 0);
}
