#pragma once

#include <functional>

#include "tridend/coproduct.hpp"

namespace tridend {

/// Cutting t along the path from the root to leaf m (1-based, left to
/// right). `left` is ^m t, `right` is t^m.
struct LightningSplit {
  PlanarTree left;
  PlanarTree right;
};

LightningSplit lightning_split(const PlanarTree& t, int m);

/// The piece a lightning belongs to, read off the first step of its path:
/// the root's last child gives ≺, the first child ≻, any other child ·.
Op lightning_piece(const PlanarTree& t, int m);

using LightningClassifier = std::function<Op(const PlanarTree&, int)>;
LightningClassifier standard_classifier();

/// Δ(t) = Σ_{m=1}^{nf(t)} ^m t ⊗ t^m on the dual side.
TensorVector dual_coproduct(const PlanarTree& t);
TensorVector dual_coproduct(const TreeVector& x);

/// One piece of the dual coproduct (Op::Left for Δ≺, Op::Mid for Δ•,
/// Op::Right for Δ≻; Op::Star gives the whole coproduct). The pieces are the
/// augmented ones: Δ≺ contains t⊗| and Δ≻ contains |⊗t. They reject |.
TensorVector dual_coproduct_piece(Op piece, const PlanarTree& t,
                                  const LightningClassifier& classify = standard_classifier());
TensorVector dual_coproduct_piece(Op piece, const TreeVector& x);

inline TensorVector dual_coproduct_prec(const PlanarTree& t) { return dual_coproduct_piece(Op::Left, t); }
inline TensorVector dual_coproduct_mid(const PlanarTree& t) { return dual_coproduct_piece(Op::Mid, t); }
inline TensorVector dual_coproduct_succ(const PlanarTree& t) { return dual_coproduct_piece(Op::Right, t); }

/// Pieces with the unit terms removed; Op::Star gives the reduced coproduct.
TensorVector reduced_dual_coproduct_piece(Op piece, const PlanarTree& t);

/// The transpose of Δ: the coefficient of w in s·t is ⟨s⊗t, Δ(w)⟩.
TreeVector dual_product(const PlanarTree& s, const PlanarTree& t);
TreeVector dual_product(const TreeVector& x, const TreeVector& y);

/// Every dual coproduct piece against the transpose of the matching
/// product, on all trees of degree <= max_degree.
Report check_dual_adjointness(int max_degree, const LightningClassifier& classify = standard_classifier());

/// cotri1..cotri7 on trees and the three product compatibilities (compact
/// and expanded forms) on pairs, up to the bound.
Report check_dual_relations(int max_degree);

/// Adjointness, the relations above, associativity and unit of the dual
/// product, and the counit of the dual coproduct.
Report check_dual_structure(int max_degree);

}  // namespace tridend
