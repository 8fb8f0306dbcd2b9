#pragma once

#include <string>

#include "tridend/coproduct.hpp"

namespace tridend {

/// π: drops every non-binary tree. Non-binary trees span the ideal
/// generated by middle products, so this is the quotient map.
TreeVector project_lr(const TreeVector& x);
TensorVector project_lr(const TensorVector& x);

/// π(t * s) on binary trees; rejects non-binary input.
TreeVector lr_product(const PlanarTree& t, const PlanarTree& s);
TreeVector lr_product(const TreeVector& x, const TreeVector& y);

/// (π⊗π)∘Δ on a binary tree; rejects non-binary input.
TensorVector lr_coproduct(const PlanarTree& t);
TensorVector lr_coproduct(const TreeVector& x);

/// Two readings of the recursive product formula on t = t1∨t2, t' = t1'∨t2':
/// Printed:  t1∨(t1'*t2) + (t*t1')∨t2'
/// Standard: t1∨(t2*t') + (t*t1')∨t2'
enum class LrReading { Printed, Standard };

std::string reading_name(LrReading reading);

TreeVector lr_product_recursive(const PlanarTree& t, const PlanarTree& s, LrReading reading);

/// Δ(t1∨t2) = Σ (t1' * t2') ⊗ (t1'' ∨ t2'') + t⊗|, Δ(|) = |⊗|, with full
/// Sweedler sums and the quotient product.
TensorVector lr_coproduct_recursive(const PlanarTree& t);

/// Non-binary trees form a coideal for Δ, Δ← and Δ→; middle products land
/// in it; and π(x*y) = π(x≺y) + π(x≻y).
Report check_biideal(int max_degree);

/// Quotient bialgebra laws and agreement with the recursive formulas:
/// associativity, coassociativity, multiplicativity of the quotient
/// coproduct, π being an algebra map, and the recursive coproduct.
Report check_lr_formulas(int max_degree);

struct LrReadingComparison {
  Report printed;
  Report standard;
};

/// Compares both readings with π∘* on binary pairs up to the bound.
LrReadingComparison compare_lr_readings(int max_total_degree);

}  // namespace tridend
