#pragma once

#include "tridend/products.hpp"

namespace tridend {

/// The tridendriform structure on A⊗̄A. For basis tensors (a⊗b) ⋉ (c⊗d):
/// if b and d are both | the result is (a⋉c)⊗|, otherwise (a*c)⊗(b⋉d).
/// With ⋉ = * it is the componentwise product.
TensorVector tensor_op(Op op, const Tensor& x, const Tensor& y);
TensorVector tensor_op(Op op, const TensorVector& x, const TensorVector& y);

/// Σ (x' f y') ⊗ (x'' g y'') over the terms of x and y.
template <class F, class G>
TensorVector componentwise(const TensorVector& x, const TensorVector& y, F&& f, G&& g) {
  TensorVector out;
  for (const auto& [p, cp] : x) {
    for (const auto& [q, cq] : y) {
      TreeVector lhs = f(p.first, q.first);
      if (lhs.empty()) continue;
      TreeVector rhs = g(p.second, q.second);
      Rational c = cp * cq;
      for (const auto& [u, cu] : lhs) {
        for (const auto& [v, cv] : rhs) out.add({u, v}, c * cu * cv);
      }
    }
  }
  return out;
}

/// componentwise() with the products of A on each side.
TensorVector componentwise(const TensorVector& x, const TensorVector& y, Op first, Op second);

/// Applies f to one leg of every tensor, giving a triple tensor.
template <class F>
Tensor3Vector map_first(const TensorVector& x, F&& f) {
  Tensor3Vector out;
  for (const auto& [p, c] : x) {
    for (const auto& [q, cq] : f(p.first)) out.add({q.first, q.second, p.second}, c * cq);
  }
  return out;
}

template <class F>
Tensor3Vector map_second(const TensorVector& x, F&& f) {
  Tensor3Vector out;
  for (const auto& [p, c] : x) {
    for (const auto& [q, cq] : f(p.second)) out.add({p.first, q.first, q.second}, c * cq);
  }
  return out;
}

/// Checks on basis tensors up to the bound: the two nestings of the
/// construction agree on triple tensors, * = ≺ + · + ≻ wherever the pieces
/// are defined, and tri1..tri7 hold away from |⊗|.
Report check_tensor_structure(int max_total_degree);

}  // namespace tridend
