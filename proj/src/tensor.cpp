#include "tridend/tensor.hpp"

#include <optional>

namespace tridend {

TensorVector tensor_op(Op op, const Tensor& x, const Tensor& y) {
  const auto& [a, b] = x;
  const auto& [c, d] = y;
  if (op != Op::Star && b.is_leaf() && d.is_leaf()) {
    return tensor(product(op, a, c), vec(PlanarTree::leaf()));
  }
  return tensor(product(Op::Star, a, c), product(op, b, d));
}

TensorVector tensor_op(Op op, const TensorVector& x, const TensorVector& y) {
  return bilinear_extend<TensorVector>(x, y, [op](const Tensor& p, const Tensor& q) { return tensor_op(op, p, q); });
}

TensorVector componentwise(const TensorVector& x, const TensorVector& y, Op first, Op second) {
  return componentwise(
      x, y, [first](const PlanarTree& p, const PlanarTree& q) { return product(first, p, q); },
      [second](const PlanarTree& p, const PlanarTree& q) { return product(second, p, q); });
}

namespace {

Tensor3Vector glue_last(const TensorVector& head, const TreeVector& tail) {
  Tensor3Vector out;
  for (const auto& [p, c] : head) {
    for (const auto& [t, ct] : tail) out.add({p.first, p.second, t}, c * ct);
  }
  return out;
}

Tensor3Vector glue_first(const TreeVector& head, const TensorVector& tail) {
  Tensor3Vector out;
  for (const auto& [t, ct] : head) {
    for (const auto& [p, c] : tail) out.add({t, p.first, p.second}, c * ct);
  }
  return out;
}

// (A⊗̄A)⊗̄A.
Tensor3Vector nested_left(Op op, const Tensor3& x, const Tensor3& y) {
  if (op != Op::Star && x[2].is_leaf() && y[2].is_leaf()) {
    return glue_last(tensor_op(op, Tensor{x[0], x[1]}, Tensor{y[0], y[1]}), vec(PlanarTree::leaf()));
  }
  return glue_last(tensor_op(Op::Star, Tensor{x[0], x[1]}, Tensor{y[0], y[1]}), product(op, x[2], y[2]));
}

// A⊗̄(A⊗̄A).
Tensor3Vector nested_right(Op op, const Tensor3& x, const Tensor3& y) {
  const bool units = x[1].is_leaf() && x[2].is_leaf() && y[1].is_leaf() && y[2].is_leaf();
  if (op != Op::Star && units) {
    return glue_first(product(op, x[0], y[0]), tens(PlanarTree::leaf(), PlanarTree::leaf()));
  }
  return glue_first(product(Op::Star, x[0], y[0]), tensor_op(op, Tensor{x[1], x[2]}, Tensor{y[1], y[2]}));
}

template <class F>
std::optional<std::string> attempt(F&& f) {
  try {
    return format(f());
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::string tensor_str(const Tensor& t) { return t.first.str() + "⊗" + t.second.str(); }
std::string tensor_str(const Tensor3& t) { return t[0].str() + "⊗" + t[1].str() + "⊗" + t[2].str(); }

int degree(const Tensor& t) { return t.first.degree() + t.second.degree(); }
int degree(const Tensor3& t) { return t[0].degree() + t[1].degree() + t[2].degree(); }

}  // namespace

Report check_tensor_structure(int max_total_degree) {
  Report report{"tensor structure", 0, {}};
  const auto trees = enumerate_trees(0, max_total_degree);
  std::vector<Tensor> pairs;
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      if (a.degree() + b.degree() <= max_total_degree) pairs.push_back({a, b});
    }
  }
  std::vector<Tensor3> triples;
  for (const auto& [a, b] : pairs) {
    for (const auto& c : trees) {
      if (a.degree() + b.degree() + c.degree() <= max_total_degree) triples.push_back({a, b, c});
    }
  }
  const std::string undefined = "undefined";

  for (const auto& x : triples) {
    for (const auto& y : triples) {
      if (degree(x) + degree(y) > max_total_degree) continue;
      for (Op op : {Op::Star, Op::Left, Op::Mid, Op::Right}) {
        auto lhs = attempt([&] { return nested_left(op, x, y); });
        auto rhs = attempt([&] { return nested_right(op, x, y); });
        ++report.checked;
        if (lhs != rhs) {
          report.fail("nesting " + op_symbol(op), tensor_str(x) + "; " + tensor_str(y), lhs.value_or(undefined),
                      rhs.value_or(undefined));
        }
      }
    }
  }

  for (const auto& x : pairs) {
    for (const auto& y : pairs) {
      if (degree(x) + degree(y) > max_total_degree) continue;
      auto parts = attempt([&] {
        return tensor_op(Op::Left, x, y) + tensor_op(Op::Mid, x, y) + tensor_op(Op::Right, x, y);
      });
      if (!parts) continue;
      TensorVector whole = tensor_op(Op::Star, x, y);
      ++report.checked;
      if (format(whole) != *parts) report.fail("*=≺+·+≻", tensor_str(x) + "; " + tensor_str(y), format(whole), *parts);
    }
  }

  const Tensor unit{PlanarTree::leaf(), PlanarTree::leaf()};
  for (const auto& x : pairs) {
    if (x == unit) continue;
    for (const auto& y : pairs) {
      if (y == unit || degree(x) + degree(y) > max_total_degree) continue;
      for (const auto& z : pairs) {
        if (z == unit || degree(x) + degree(y) + degree(z) > max_total_degree) continue;
        for (const auto& rel : tridend_relations()) {
          TensorVector lhs = tensor_op(rel.outer_left, tensor_op(rel.inner_left, x, y), TensorVector(z));
          TensorVector rhs = tensor_op(rel.outer_right, TensorVector(x), tensor_op(rel.inner_right, y, z));
          ++report.checked;
          if (lhs != rhs) {
            report.fail(rel.name, tensor_str(x) + "; " + tensor_str(y) + "; " + tensor_str(z), format(lhs),
                        format(rhs));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace tridend
