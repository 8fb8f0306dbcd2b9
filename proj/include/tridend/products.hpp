#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tridend/linear.hpp"
#include "tridend/report.hpp"

namespace tridend {

/// The associative product * and its three pieces ≺, ·, ≻.
enum class Op { Star, Left, Mid, Right };

inline constexpr std::array<Op, 3> kPieces{Op::Left, Op::Mid, Op::Right};

/// "*", "≺", "·", "≻".
std::string op_symbol(Op op);
/// Accepts star|left|mid|right.
Op parse_op(const std::string& name);

/// A surjection from {1..k+l} onto {1..n}, increasing on {1..k} and on
/// {k+1..k+l}. values[i] is the image of i+1.
struct QuasiShuffle {
  int k = 0;
  int l = 0;
  std::vector<int> values;

  int n() const;
  /// Which piece of * the term belongs to, read off the preimage of 1.
  Op piece() const;
  friend bool operator==(const QuasiShuffle&, const QuasiShuffle&) = default;
};

/// All (k,l) quasi-shuffles in lexicographic order of their values.
std::vector<QuasiShuffle> enumerate_qsh(int k, int l);

/// The ladder construction: node 1 sits on the root; node i receives the
/// right-comb forest F_j of t (j <= k) on its left and the left-comb forest
/// of s on its right whenever σ(j) = i.
PlanarTree apply_qsh(const QuasiShuffle& sigma, const PlanarTree& t, const PlanarTree& s);

/// Products on basis trees, computed from quasi-shuffles. Unit rules:
/// |*y = y = y*|, |≺y = 0, y≺| = y, |≻y = y, y≻| = 0, and · vanishes on
/// any unit. |≺|, |·| and |≻| throw DomainError.
TreeVector product(Op op, const PlanarTree& t, const PlanarTree& s);
TreeVector product(Op op, const TreeVector& x, const TreeVector& y);

inline TreeVector star(const TreeVector& x, const TreeVector& y) { return product(Op::Star, x, y); }
inline TreeVector left(const TreeVector& x, const TreeVector& y) { return product(Op::Left, x, y); }
inline TreeVector mid(const TreeVector& x, const TreeVector& y) { return product(Op::Mid, x, y); }
inline TreeVector right(const TreeVector& x, const TreeVector& y) { return product(Op::Right, x, y); }

/// The recursive definitions on the grafting decomposition x = x0∨...∨xk,
/// kept as an independent oracle for the quasi-shuffle formula.
TreeVector product_inductive(Op op, const PlanarTree& t, const PlanarTree& s);
TreeVector product_inductive(Op op, const TreeVector& x, const TreeVector& y);

/// Pluggable product on basis trees, so checks can run against fixtures.
using TreeProduct = std::function<TreeVector(Op, const PlanarTree&, const PlanarTree&)>;

TreeProduct standard_product();
TreeVector apply_product(const TreeProduct& prod, Op op, const TreeVector& x, const TreeVector& y);

/// (a ⋉ b) ⋊ c = a ⋉' (b ⋊' c).
struct Relation {
  std::string name;
  Op inner_left;
  Op outer_left;
  Op outer_right;
  Op inner_right;
};

/// The seven tridendriform relations tri1..tri7.
const std::vector<Relation>& tridend_relations();

/// Checks every relation on all triples of trees of degree >= 1 whose
/// degrees sum to at most max_total_degree.
Report check_tridend_axioms(int max_total_degree, const TreeProduct& prod = standard_product());

/// Checks qsh products against the inductive ones, * = ≺ + · + ≻ and
/// associativity of * on pairs/triples up to the bound.
Report check_product_equivalence(int max_total_degree);

/// Checks that σ ↦ σ(t,s) has no collisions for every pair up to the bound.
Report check_qsh_injectivity(int max_total_degree);

/// Expression over the generator g = Y and the three pieces.
class Expr {
 public:
  static Expr gen();
  static Expr apply(Op op, Expr lhs, Expr rhs);

  bool is_gen() const { return node_ == nullptr; }
  Op op() const;
  const Expr& lhs() const;
  const Expr& rhs() const;

  /// "g", "g≺g", "g·g·g", "(g≺g)≻g", ...
  std::string str() const;
  TreeVector evaluate() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// Writes t != | as an expression in Y, following the four-case split on
/// its grafting decomposition. evaluate() gives back exactly t.
Expr express_in_generator(const PlanarTree& t);

}  // namespace tridend
