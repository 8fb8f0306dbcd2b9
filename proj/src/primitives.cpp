#include "tridend/primitives.hpp"

#include <iostream>
#include <map>
#include <stdexcept>

namespace tridend {

std::string kind_name(PrimKind kind) {
  switch (kind) {
    case PrimKind::Coass: return "coass";
    case PrimKind::Codend: return "codend";
    case PrimKind::Left: return "left";
    case PrimKind::Right: return "right";
  }
  return "?";
}

PrimKind parse_kind(const std::string& name) {
  if (name == "coass") return PrimKind::Coass;
  if (name == "codend") return PrimKind::Codend;
  if (name == "left") return PrimKind::Left;
  if (name == "right") return PrimKind::Right;
  throw ParseError("unknown primitive kind '" + name + "'");
}

namespace {

// The reduced coproducts whose joint kernel defines the kind.
std::vector<TensorVector> constraints(PrimKind kind, const PlanarTree& t) {
  switch (kind) {
    case PrimKind::Coass: return {reduced_coproduct(t)};
    case PrimKind::Codend: return {reduced_coproduct_left(t), reduced_coproduct_right(t)};
    case PrimKind::Left: return {reduced_coproduct_left(t)};
    case PrimKind::Right: return {reduced_coproduct_right(t)};
  }
  return {};
}

bool is_primitive(PrimKind kind, const TreeVector& x) {
  for (const auto& [t, c] : x) {
    if (t.is_leaf()) return false;
  }
  switch (kind) {
    case PrimKind::Coass: return reduced_coproduct(x).empty();
    case PrimKind::Codend: return reduced_coproduct_left(x).empty() && reduced_coproduct_right(x).empty();
    case PrimKind::Left: return reduced_coproduct_left(x).empty();
    case PrimKind::Right: return reduced_coproduct_right(x).empty();
  }
  return false;
}

}  // namespace

PrimitiveBasis primitive_basis(PrimKind kind, int n, bool allow_large) {
  if (n < 1) throw std::invalid_argument("primitive_basis: degree must be at least 1");
  if (n > kDefaultDegreeCap) {
    if (!allow_large) {
      throw std::invalid_argument("primitive_basis: degree " + std::to_string(n) + " exceeds the default cap of " +
                                  std::to_string(kDefaultDegreeCap));
    }
    std::clog << "warning: computing " << kind_name(kind) << " primitives in degree " << n
              << "; this can take a long time\n";
  }
  const auto trees = enumerate_trees(n);
  // Row keys: which constraint, then the tensor.
  std::map<std::pair<int, Tensor>, int> row_index;
  std::vector<SparseRow> rows;
  for (int j = 0; j < static_cast<int>(trees.size()); ++j) {
    auto parts = constraints(kind, trees[static_cast<std::size_t>(j)]);
    for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
      for (const auto& [tensor_key, c] : parts[static_cast<std::size_t>(p)]) {
        auto [it, inserted] = row_index.try_emplace({p, tensor_key}, static_cast<int>(rows.size()));
        if (inserted) rows.emplace_back();
        rows[static_cast<std::size_t>(it->second)][j] = c;
      }
    }
  }
  RowEchelon echelon(static_cast<int>(trees.size()));
  for (auto& r : rows) echelon.insert(std::move(r));
  PrimitiveBasis basis{n, kind, {}};
  for (const auto& v : echelon.kernel_basis()) {
    TreeVector x;
    for (std::size_t j = 0; j < v.size(); ++j) x.add(trees[j], v[j]);
    basis.vectors.push_back(std::move(x));
  }
  return basis;
}

std::vector<TreeVector> theta(const PrimitiveBasis& basis) {
  if (basis.kind != PrimKind::Coass) throw std::invalid_argument("theta: expects a basis of coassociative primitives");
  std::vector<TreeVector> out;
  const TreeVector y = vec(generator());
  for (const auto& a : basis.vectors) out.push_back(mid(a, y));
  return out;
}

std::vector<PlanarTree> primitive_trees(int n) {
  std::vector<PlanarTree> out;
  for (const auto& t : enumerate_trees(n)) {
    if (!t.is_leaf() && reduced_coproduct(t).empty()) out.push_back(t);
  }
  return out;
}

std::vector<DimensionRow> dimension_table(int max_degree, bool allow_large) {
  if (max_degree < 1) throw std::invalid_argument("dimension_table: max degree must be at least 1");
  std::vector<DimensionRow> rows;
  for (int n = 1; n <= max_degree; ++n) {
    DimensionRow row;
    row.degree = n;
    row.dim_a = static_cast<long long>(enumerate_trees(n).size());
    row.coass = primitive_basis(PrimKind::Coass, n, allow_large).dim();
    row.codend = primitive_basis(PrimKind::Codend, n, allow_large).dim();
    row.left = primitive_basis(PrimKind::Left, n, allow_large).dim();
    row.right = primitive_basis(PrimKind::Right, n, allow_large).dim();
    rows.push_back(row);
  }
  return rows;
}

Report check_primitives(int max_degree) {
  Report report{"primitives", 0, {}};
  std::map<std::pair<PrimKind, int>, PrimitiveBasis> bases;
  auto basis = [&](PrimKind kind, int n) -> const PrimitiveBasis& {
    auto key = std::make_pair(kind, n);
    auto it = bases.find(key);
    if (it == bases.end()) it = bases.emplace(key, primitive_basis(kind, n)).first;
    return it->second;
  };
  auto expect = [&](bool ok, const std::string& law, const std::string& inputs, const std::string& lhs,
                    const std::string& rhs) {
    ++report.checked;
    if (!ok) report.fail(law, inputs, lhs, rhs);
  };

  for (int n = 1; n <= max_degree; ++n) {
    const auto& codend = basis(PrimKind::Codend, n);
    const auto& coass = basis(PrimKind::Coass, n);
    const auto& left_b = basis(PrimKind::Left, n);
    const auto& right_b = basis(PrimKind::Right, n);
    const std::string deg = "degree " + std::to_string(n);
    for (const auto& v : codend.vectors) {
      expect(is_primitive(PrimKind::Codend, v), "codend basis is primitive", deg, format(v), "0");
      expect(in_span(coass.vectors, v), "Prim_Codend ⊆ Prim_Coass", deg, format(v), "not in span");
      expect(in_span(left_b.vectors, v) && in_span(right_b.vectors, v), "Prim_Codend ⊆ Prim_← ∩ Prim_→", deg,
             format(v), "not in span");
    }
    // dim(L ∩ R) = dim L + dim R - dim(L + R).
    std::vector<TreeVector> both = left_b.vectors;
    both.insert(both.end(), right_b.vectors.begin(), right_b.vectors.end());
    const int meet = left_b.dim() + right_b.dim() - rank(both);
    expect(meet == codend.dim(), "Prim_Codend = Prim_← ∩ Prim_→", deg, std::to_string(codend.dim()),
           std::to_string(meet));
    for (const auto& v : coass.vectors) {
      expect(is_primitive(PrimKind::Coass, v), "coass basis is primitive", deg, format(v), "0");
    }
    expect(rank(coass.vectors) == coass.dim(), "coass basis independent", deg, std::to_string(coass.dim()),
           std::to_string(rank(coass.vectors)));

    const auto corollas = primitive_trees(n);
    expect(corollas.size() == 1 && corollas.front() == corolla(n), "primitive trees are corollas", deg,
           std::to_string(corollas.size()) + " primitive trees", corolla(n).str());

    if (n + 1 <= max_degree) {
      const auto images = theta(coass);
      const auto& target = basis(PrimKind::Codend, n + 1);
      bool inside = true;
      for (const auto& v : images) inside = inside && is_primitive(PrimKind::Codend, v);
      expect(inside, "θ lands in Prim_Codend", deg, "", "");
      expect(rank(images) == coass.dim() && coass.dim() == target.dim(), "θ is an isomorphism", deg,
             "rank " + std::to_string(rank(images)), "dim " + std::to_string(target.dim()));
    }
  }

  for (int i = 1; i <= max_degree; ++i) {
    for (int j = 1; i + j <= max_degree; ++j) {
      const std::string degs = "degrees " + std::to_string(i) + "," + std::to_string(j);
      for (const auto& a : basis(PrimKind::Coass, i).vectors) {
        for (const auto& b : basis(PrimKind::Left, j).vectors) {
          TreeVector x = right(a, b);
          expect(is_primitive(PrimKind::Left, x), "θ≻ into Prim_←", degs, format(a) + " ≻ " + format(b), format(x));
        }
        for (const auto& b : basis(PrimKind::Right, j).vectors) {
          TreeVector x = left(a, b);
          expect(is_primitive(PrimKind::Right, x), "θ≺ into Prim_→", degs, format(a) + " ≺ " + format(b), format(x));
        }
        for (const auto& b : basis(PrimKind::Codend, j).vectors) {
          TreeVector x = mid(a, b);
          expect(is_primitive(PrimKind::Codend, x), "θ• into Prim_Codend", degs, format(a) + " · " + format(b),
                 format(x));
        }
      }
    }
  }
  return report;
}

}  // namespace tridend
