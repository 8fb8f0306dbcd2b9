#pragma once

#include <functional>
#include <vector>

#include "tridend/tensor.hpp"

namespace tridend {

/// An internal edge, named by the path of 0-based child indices from the
/// root to its upper vertex and the index of the lower vertex among that
/// vertex's children.
struct CutEdge {
  std::vector<int> parent_path;
  int child = 0;
  friend bool operator==(const CutEdge&, const CutEdge&) = default;
  friend auto operator<=>(const CutEdge&, const CutEdge&) = default;
};

struct AdmissibleCut {
  enum class Kind { Empty, Total, Edges };
  Kind kind = Kind::Empty;
  std::vector<CutEdge> edges;

  static AdmissibleCut empty() { return {Kind::Empty, {}}; }
  static AdmissibleCut total() { return {Kind::Total, {}}; }
  friend bool operator==(const AdmissibleCut&, const AdmissibleCut&) = default;
};

/// Empty first, then every nonempty set of internal edges with at most one
/// edge on each root-to-leaf path, then Total.
std::vector<AdmissibleCut> enumerate_admissible_cuts(const PlanarTree& t);

struct CutParts {
  TreeVector fallen;   // G: *-product of the fallen subtrees, left to right
  PlanarTree trunk;    // P: the part still attached to the root
};

/// Throws std::invalid_argument for a cut that is not admissible for t.
CutParts cut_parts(const PlanarTree& t, const AdmissibleCut& cut);

/// True when the right-most leaf of t ends up in G.
bool cuts_rightmost_leaf(const PlanarTree& t, const AdmissibleCut& cut);

/// Δ(t) = Σ_c G^c(t) ⊗ P^c(t); Δ(|) = |⊗|.
TensorVector coproduct(const PlanarTree& t);
TensorVector coproduct(const TreeVector& x);
/// Δ̃(x) = Δ(x) - x⊗| - |⊗x, for x without a | component.
TensorVector reduced_coproduct(const PlanarTree& t);
TensorVector reduced_coproduct(const TreeVector& x);

/// The terms of Δ whose cut takes the right-most leaf into G (Δ←) or leaves
/// it in P (Δ→). Both reject the unit.
TensorVector coproduct_left(const PlanarTree& t);
TensorVector coproduct_right(const PlanarTree& t);
TensorVector coproduct_left(const TreeVector& x);
TensorVector coproduct_right(const TreeVector& x);
/// Δ̃← = Δ← - t⊗|, Δ̃→ = Δ→ - |⊗t.
TensorVector reduced_coproduct_left(const PlanarTree& t);
TensorVector reduced_coproduct_right(const PlanarTree& t);
TensorVector reduced_coproduct_left(const TreeVector& x);
TensorVector reduced_coproduct_right(const TreeVector& x);

/// Counit: the coefficient of |.
Rational counit(const TreeVector& x);

using Coproduct = std::function<TensorVector(const PlanarTree&)>;
Coproduct standard_coproduct();

/// Coassociativity and counit on every tree of degree <= max_degree, and
/// Δ(x⋉y) = Δ(x)⋉Δ(y) for ⋉ ∈ {≺,·,≻} on pairs with degree sum <= max_degree.
Report check_bialgebra(int max_degree, const Coproduct& delta = standard_coproduct());

/// The six (3,2) compatibilities on pairs of non-unit trees with degree sum
/// <= bound, and the three codendriform coassociativity identities.
Report check_32_relations(int max_total_degree);

/// Lemma-level identities: the reduced coproduct of t⋉s expressed through
/// Δ̃(t) and Δ̃(s), grading of Δ, and Δ = Δ← + Δ→.
Report check_coproduct_identities(int max_total_degree);

}  // namespace tridend
