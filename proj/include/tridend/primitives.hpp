#pragma once

#include <string>
#include <vector>

#include "tridend/coproduct.hpp"

namespace tridend {

/// Which reduced coproducts must vanish: Δ̃ (coass), Δ̃← and Δ̃→ (codend),
/// Δ̃← only (left) or Δ̃→ only (right).
enum class PrimKind { Coass, Codend, Left, Right };

std::string kind_name(PrimKind kind);
PrimKind parse_kind(const std::string& name);

struct PrimitiveBasis {
  int degree = 0;
  PrimKind kind = PrimKind::Coass;
  std::vector<TreeVector> vectors;

  int dim() const { return static_cast<int>(vectors.size()); }
};

/// Kernels above this degree get large; asking for them needs allow_large.
inline constexpr int kDefaultDegreeCap = 6;

/// Exact kernel basis over the canonical basis of A_n, one vector per free
/// column of the reduced row echelon form.
PrimitiveBasis primitive_basis(PrimKind kind, int n, bool allow_large = false);

/// θ_n: a ↦ a·Y, applied to a coass basis.
std::vector<TreeVector> theta(const PrimitiveBasis& basis);

/// Basis trees t of degree n with Δ̃(t) = 0.
std::vector<PlanarTree> primitive_trees(int n);

struct DimensionRow {
  int degree = 0;
  long long dim_a = 0;
  int coass = 0;
  int codend = 0;
  int left = 0;
  int right = 0;
};

std::vector<DimensionRow> dimension_table(int max_degree, bool allow_large = false);

/// Prim_Codend = Prim_← ∩ Prim_→ ⊆ Prim_Coass, the θ-type closure maps,
/// θ_n onto Prim_Codend(n+1), and primitive trees being corollas.
Report check_primitives(int max_degree);

}  // namespace tridend
