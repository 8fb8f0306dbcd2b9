#include "tridend/dual.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace tridend {

LightningSplit lightning_split(const PlanarTree& t, int m) {
  if (m < 1 || m > t.leaves()) {
    throw std::out_of_range("lightning_split: leaf " + std::to_string(m) + " out of range for " + t.str());
  }
  std::vector<Forest> lefts;
  std::vector<Forest> rights;
  const PlanarTree* node = &t;
  int target = m;  // position of the leaf inside the current subtree
  while (!node->is_leaf()) {
    auto kids = node->children();
    std::size_t i = 0;
    while (target > kids[i].leaves()) {
      target -= kids[i].leaves();
      ++i;
    }
    if (i > 0) lefts.emplace_back(kids.begin(), kids.begin() + static_cast<std::ptrdiff_t>(i));
    if (i + 1 < kids.size()) rights.emplace_back(kids.begin() + static_cast<std::ptrdiff_t>(i) + 1, kids.end());
    node = &kids[i];
  }
  return {assemble_right_comb(lefts), assemble_left_comb(rights)};
}

Op lightning_piece(const PlanarTree& t, int m) {
  if (t.is_leaf()) throw DomainError("the unit has no lightning pieces");
  if (m < 1 || m > t.leaves()) throw std::out_of_range("lightning_piece: leaf out of range");
  auto kids = t.children();
  if (m <= kids.front().leaves()) return Op::Right;
  if (m > t.leaves() - kids.back().leaves()) return Op::Left;
  return Op::Mid;
}

LightningClassifier standard_classifier() {
  return [](const PlanarTree& t, int m) { return lightning_piece(t, m); };
}

TensorVector dual_coproduct(const PlanarTree& t) {
  TensorVector out;
  for (int m = 1; m <= t.leaves(); ++m) {
    auto [u, v] = lightning_split(t, m);
    out.add({u, v}, 1);
  }
  return out;
}

TensorVector dual_coproduct(const TreeVector& x) {
  return linear_extend<TensorVector>(x, [](const PlanarTree& t) { return dual_coproduct(t); });
}

TensorVector dual_coproduct_piece(Op piece, const PlanarTree& t, const LightningClassifier& classify) {
  if (piece == Op::Star) return dual_coproduct(t);
  if (t.is_leaf()) throw DomainError("the pieces of the dual coproduct are not defined on |");
  TensorVector out;
  for (int m = 1; m <= t.leaves(); ++m) {
    if (classify(t, m) != piece) continue;
    auto [u, v] = lightning_split(t, m);
    out.add({u, v}, 1);
  }
  return out;
}

TensorVector dual_coproduct_piece(Op piece, const TreeVector& x) {
  return linear_extend<TensorVector>(x, [piece](const PlanarTree& t) { return dual_coproduct_piece(piece, t); });
}

TensorVector reduced_dual_coproduct_piece(Op piece, const PlanarTree& t) {
  if (t.is_leaf()) throw DomainError("reduced dual coproducts are not defined on |");
  TensorVector d = dual_coproduct_piece(piece, t);
  const PlanarTree bar = PlanarTree::leaf();
  if (piece == Op::Left || piece == Op::Star) d.add({t, bar}, -1);
  if (piece == Op::Right || piece == Op::Star) d.add({bar, t}, -1);
  return d;
}

namespace {

using ProductTable = std::map<Tensor, TreeVector>;

const ProductTable& product_table(int n) {
  static std::mutex mutex;
  static std::map<int, ProductTable> tables;
  std::lock_guard lock(mutex);
  auto it = tables.find(n);
  if (it != tables.end()) return it->second;
  ProductTable table;
  for (const auto& w : enumerate_trees(n)) {
    for (const auto& [st, c] : coproduct(w)) table[st].add(w, c);
  }
  return tables.emplace(n, std::move(table)).first->second;
}

}  // namespace

TreeVector dual_product(const PlanarTree& s, const PlanarTree& t) {
  const auto& table = product_table(s.degree() + t.degree());
  auto it = table.find({s, t});
  return it == table.end() ? TreeVector() : it->second;
}

TreeVector dual_product(const TreeVector& x, const TreeVector& y) {
  return bilinear_extend<TreeVector>(x, y, [](const PlanarTree& s, const PlanarTree& t) { return dual_product(s, t); });
}

namespace {

TensorVector dual_componentwise(const TensorVector& x, const TensorVector& y) {
  auto dp = [](const PlanarTree& a, const PlanarTree& b) { return dual_product(a, b); };
  return componentwise(x, y, dp, dp);
}

}  // namespace

Report check_dual_adjointness(int max_degree, const LightningClassifier& classify) {
  Report report{"dual adjointness", 0, {}};
  // transposed[op][w] = Σ ⟨w, a op b⟩ a⊗b
  std::map<Op, std::map<PlanarTree, TensorVector>> transposed;
  const auto trees = enumerate_trees(0, max_degree);
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      if (a.degree() + b.degree() > max_degree) continue;
      for (Op op : {Op::Star, Op::Left, Op::Mid, Op::Right}) {
        if (op != Op::Star && a.is_leaf() && b.is_leaf()) continue;
        for (const auto& [w, c] : product(op, a, b)) transposed[op][w].add({a, b}, c);
      }
    }
  }
  for (const auto& w : trees) {
    for (Op op : {Op::Star, Op::Left, Op::Mid, Op::Right}) {
      if (op != Op::Star && w.is_leaf()) continue;
      TensorVector lhs = dual_coproduct_piece(op, w, classify);
      TensorVector rhs = transposed[op][w];
      ++report.checked;
      if (lhs != rhs) {
        std::string law = op == Op::Star ? "Δ = transpose of *" : "Δ" + op_symbol(op) + " adjoint to " + op_symbol(op);
        report.fail(law, w.str(), format(lhs), format(rhs));
      }
    }
  }
  return report;
}

Report check_dual_relations(int max_degree) {
  Report report{"dual relations", 0, {}};
  const PlanarTree bar = PlanarTree::leaf();
  const auto trees = enumerate_trees(1, max_degree);
  auto piece = [](Op op) {
    return [op](const PlanarTree& t) { return dual_coproduct_piece(op, t); };
  };
  int index = 1;
  for (const auto& rel : tridend_relations()) {
    // (a⋉b)⋊c = a⋉'(b⋊'c) dualizes to (Δ⋉⊗Id)∘Δ⋊ = (Id⊗Δ⋊')∘Δ⋉'.
    const std::string name = "cotri" + std::to_string(index++);
    for (const auto& t : trees) {
      Tensor3Vector lhs = map_first(dual_coproduct_piece(rel.outer_left, t), piece(rel.inner_left));
      Tensor3Vector rhs = map_second(dual_coproduct_piece(rel.outer_right, t), piece(rel.inner_right));
      ++report.checked;
      if (lhs != rhs) report.fail(name, t.str(), format(lhs), format(rhs));
    }
  }
  for (const auto& f : trees) {
    for (const auto& g : trees) {
      if (f.degree() + g.degree() > max_degree) continue;
      const TreeVector fg = dual_product(f, g);
      const TensorVector df = dual_coproduct(f);
      const TensorVector rf = reduced_dual_coproduct_piece(Op::Star, f);
      const TensorVector one_f = tens(bar, f);
      const TensorVector f_one = tens(f, bar);
      const TensorVector g_one = tens(g, bar);
      const std::string inputs = f.str() + "; " + g.str();
      auto check = [&](const std::string& name, const TensorVector& lhs, const TensorVector& rhs) {
        ++report.checked;
        if (lhs != rhs) report.fail(name, inputs, format(lhs), format(rhs));
      };
      for (Op op : kPieces) {
        check("Δ" + op_symbol(op) + "(fg) = Δ(f)Δ" + op_symbol(op) + "(g)", dual_coproduct_piece(op, fg),
              dual_componentwise(df, dual_coproduct_piece(op, g)));
      }
      const TensorVector gl = reduced_dual_coproduct_piece(Op::Left, g);
      const TensorVector gm = reduced_dual_coproduct_piece(Op::Mid, g);
      const TensorVector gr = reduced_dual_coproduct_piece(Op::Right, g);
      auto reduced = [&](Op op) {
        return linear_extend<TensorVector>(fg, [op](const PlanarTree& t) { return reduced_dual_coproduct_piece(op, t); });
      };
      check("compa1", reduced(Op::Left),
            tens(g, f) + dual_componentwise(one_f, gl) + dual_componentwise(f_one, gl) +
                dual_componentwise(rf, g_one) + dual_componentwise(rf, gl));
      check("compa2", reduced(Op::Mid),
            dual_componentwise(rf, gm) + dual_componentwise(f_one, gm) + dual_componentwise(one_f, gm));
      check("compa3", reduced(Op::Right),
            tens(f, g) + dual_componentwise(rf, gr) + dual_componentwise(f_one, gr) +
                dual_componentwise(rf, tens(bar, g)) + dual_componentwise(one_f, gr));
    }
  }
  return report;
}

Report check_dual_structure(int max_degree) {
  Report report = check_dual_adjointness(max_degree);
  report.name = "dual structure";
  report.merge(check_dual_relations(max_degree));
  const PlanarTree bar = PlanarTree::leaf();
  const auto trees = enumerate_trees(0, max_degree);
  for (const auto& t : trees) {
    ++report.checked;
    if (dual_product(bar, t) != vec(t) || dual_product(t, bar) != vec(t)) {
      report.fail("unit of the dual product", t.str(), format(dual_product(bar, t)), t.str());
    }
    TreeVector left_counit;
    TreeVector right_counit;
    for (const auto& [p, c] : dual_coproduct(t)) {
      if (p.first.is_leaf()) left_counit.add(p.second, c);
      if (p.second.is_leaf()) right_counit.add(p.first, c);
    }
    ++report.checked;
    if (left_counit != vec(t) || right_counit != vec(t)) {
      report.fail("counit of the dual coproduct", t.str(), format(left_counit), format(right_counit));
    }
    for (int m = 1; m <= t.leaves(); ++m) {
      auto [u, v] = lightning_split(t, m);
      ++report.checked;
      if (u.leaves() != m || v.leaves() != t.leaves() - m + 1) {
        report.fail("lightning leaf count", t.str() + "; m=" + std::to_string(m), u.str(), v.str());
      }
    }
  }
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      if (a.degree() + b.degree() > max_degree) continue;
      for (const auto& c : trees) {
        if (a.degree() + b.degree() + c.degree() > max_degree) continue;
        TreeVector lhs = dual_product(dual_product(a, b), vec(c));
        TreeVector rhs = dual_product(vec(a), dual_product(b, c));
        ++report.checked;
        if (lhs != rhs) {
          report.fail("associativity of the dual product", a.str() + "; " + b.str() + "; " + c.str(), format(lhs),
                      format(rhs));
        }
      }
    }
  }
  return report;
}

}  // namespace tridend
