#include "tridend/coproduct.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace tridend {

namespace {

using EdgeSet = std::vector<CutEdge>;

std::vector<EdgeSet> edge_sets(const PlanarTree& node, std::vector<int>& path) {
  std::vector<EdgeSet> result{{}};
  auto kids = node.children();
  for (int i = 0; i < static_cast<int>(kids.size()); ++i) {
    const PlanarTree& child = kids[static_cast<std::size_t>(i)];
    if (child.is_leaf()) continue;
    path.push_back(i);
    std::vector<EdgeSet> options = edge_sets(child, path);
    path.pop_back();
    options.push_back({CutEdge{path, i}});
    std::vector<EdgeSet> next;
    next.reserve(result.size() * options.size());
    for (const auto& base : result) {
      for (const auto& opt : options) {
        EdgeSet combined = base;
        combined.insert(combined.end(), opt.begin(), opt.end());
        next.push_back(std::move(combined));
      }
    }
    result = std::move(next);
  }
  return result;
}

const PlanarTree& node_at(const PlanarTree& t, const std::vector<int>& path) {
  const PlanarTree* node = &t;
  for (int i : path) {
    auto kids = node->children();
    if (i < 0 || i >= static_cast<int>(kids.size())) throw std::invalid_argument("cut edge: path leaves the tree");
    node = &kids[static_cast<std::size_t>(i)];
  }
  return *node;
}

void validate_edges(const PlanarTree& t, const EdgeSet& edges) {
  if (edges.empty()) throw std::invalid_argument("cut: an edge cut needs at least one edge");
  std::vector<std::vector<int>> lower;
  for (const auto& e : edges) {
    const PlanarTree& parent = node_at(t, e.parent_path);
    auto kids = parent.children();
    if (e.child < 0 || e.child >= static_cast<int>(kids.size())) {
      throw std::invalid_argument("cut edge: child index out of range");
    }
    if (kids[static_cast<std::size_t>(e.child)].is_leaf()) {
      throw std::invalid_argument("cut edge: edges to leaves are not internal");
    }
    auto full = e.parent_path;
    full.push_back(e.child);
    lower.push_back(std::move(full));
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (i == j) continue;
      const auto& a = lower[i];
      const auto& b = lower[j];
      if (a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin())) {
        throw std::invalid_argument("cut: two edges lie on the same root-to-leaf path");
      }
    }
  }
}

PlanarTree prune(const PlanarTree& node, std::vector<int>& path, const std::set<CutEdge>& edges, Forest& fallen) {
  if (node.is_leaf()) return node;
  Forest kids;
  auto children = node.children();
  for (int i = 0; i < static_cast<int>(children.size()); ++i) {
    const PlanarTree& child = children[static_cast<std::size_t>(i)];
    if (edges.count(CutEdge{path, i})) {
      fallen.push_back(child);
      kids.push_back(PlanarTree::leaf());
    } else {
      path.push_back(i);
      kids.push_back(prune(child, path, edges, fallen));
      path.pop_back();
    }
  }
  return PlanarTree::graft(std::move(kids));
}

struct Split {
  TensorVector full;
  TensorVector left;
  TensorVector right;
};

Split compute_split(const PlanarTree& t) {
  Split s;
  if (t.is_leaf()) {
    s.full = tens(t, t);
    return s;
  }
  for (const auto& cut : enumerate_admissible_cuts(t)) {
    CutParts parts = cut_parts(t, cut);
    TensorVector term = tensor(parts.fallen, vec(parts.trunk));
    s.full += term;
    (cuts_rightmost_leaf(t, cut) ? s.left : s.right) += term;
  }
  return s;
}

const Split& split(const PlanarTree& t) {
  static std::mutex mutex;
  static std::unordered_map<PlanarTree, Split> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
  }
  Split value = compute_split(t);
  std::lock_guard lock(mutex);
  // References into an unordered_map stay valid across rehashing.
  return cache.emplace(t, std::move(value)).first->second;
}

void reject_unit(const PlanarTree& t, const char* what) {
  if (t.is_leaf()) throw DomainError(std::string(what) + " is not defined on the unit");
}

}  // namespace

std::vector<AdmissibleCut> enumerate_admissible_cuts(const PlanarTree& t) {
  // On the unit the empty and total cuts coincide; keep a single one so
  // that Δ(|) = |⊗|.
  if (t.is_leaf()) return {AdmissibleCut::empty()};
  std::vector<AdmissibleCut> cuts{AdmissibleCut::empty()};
  std::vector<int> path;
  for (auto& edges : edge_sets(t, path)) {
    if (!edges.empty()) cuts.push_back({AdmissibleCut::Kind::Edges, std::move(edges)});
  }
  cuts.push_back(AdmissibleCut::total());
  return cuts;
}

CutParts cut_parts(const PlanarTree& t, const AdmissibleCut& cut) {
  switch (cut.kind) {
    case AdmissibleCut::Kind::Empty: return {vec(PlanarTree::leaf()), t};
    case AdmissibleCut::Kind::Total: return {vec(t), PlanarTree::leaf()};
    case AdmissibleCut::Kind::Edges: break;
  }
  validate_edges(t, cut.edges);
  std::set<CutEdge> edges(cut.edges.begin(), cut.edges.end());
  Forest fallen;
  std::vector<int> path;
  PlanarTree trunk = prune(t, path, edges, fallen);
  TreeVector g = vec(fallen.front());
  for (std::size_t i = 1; i < fallen.size(); ++i) g = star(g, vec(fallen[i]));
  return {std::move(g), std::move(trunk)};
}

bool cuts_rightmost_leaf(const PlanarTree& t, const AdmissibleCut& cut) {
  switch (cut.kind) {
    case AdmissibleCut::Kind::Empty: return false;
    case AdmissibleCut::Kind::Total: return true;
    case AdmissibleCut::Kind::Edges: break;
  }
  for (const auto& e : cut.edges) {
    const PlanarTree* node = &t;
    bool on_branch = true;
    for (int i : e.parent_path) {
      if (i != static_cast<int>(node->children().size()) - 1) {
        on_branch = false;
        break;
      }
      node = &node->children().back();
    }
    if (on_branch && e.child == static_cast<int>(node->children().size()) - 1) return true;
  }
  return false;
}

TensorVector coproduct(const PlanarTree& t) { return split(t).full; }

TensorVector coproduct(const TreeVector& x) {
  return linear_extend<TensorVector>(x, [](const PlanarTree& t) { return coproduct(t); });
}

TensorVector reduced_coproduct(const PlanarTree& t) {
  reject_unit(t, "the reduced coproduct");
  TensorVector d = coproduct(t);
  d.add({t, PlanarTree::leaf()}, -1);
  d.add({PlanarTree::leaf(), t}, -1);
  return d;
}

TensorVector reduced_coproduct(const TreeVector& x) {
  return linear_extend<TensorVector>(x, [](const PlanarTree& t) { return reduced_coproduct(t); });
}

TensorVector coproduct_left(const PlanarTree& t) {
  reject_unit(t, "Δ←");
  return split(t).left;
}

TensorVector coproduct_right(const PlanarTree& t) {
  reject_unit(t, "Δ→");
  return split(t).right;
}

TensorVector coproduct_left(const TreeVector& x) {
  return linear_extend<TensorVector>(x, [](const PlanarTree& t) { return coproduct_left(t); });
}

TensorVector coproduct_right(const TreeVector& x) {
  return linear_extend<TensorVector>(x, [](const PlanarTree& t) { return coproduct_right(t); });
}

TensorVector reduced_coproduct_left(const PlanarTree& t) {
  TensorVector d = coproduct_left(t);
  d.add({t, PlanarTree::leaf()}, -1);
  return d;
}

TensorVector reduced_coproduct_right(const PlanarTree& t) {
  TensorVector d = coproduct_right(t);
  d.add({PlanarTree::leaf(), t}, -1);
  return d;
}

TensorVector reduced_coproduct_left(const TreeVector& x) {
  return linear_extend<TensorVector>(x, [](const PlanarTree& t) { return reduced_coproduct_left(t); });
}

TensorVector reduced_coproduct_right(const TreeVector& x) {
  return linear_extend<TensorVector>(x, [](const PlanarTree& t) { return reduced_coproduct_right(t); });
}

Rational counit(const TreeVector& x) { return x.coeff(PlanarTree::leaf()); }

Coproduct standard_coproduct() {
  return [](const PlanarTree& t) { return coproduct(t); };
}

namespace {

TensorVector apply_delta(const Coproduct& delta, const TreeVector& x) {
  return linear_extend<TensorVector>(x, [&](const PlanarTree& t) { return delta(t); });
}

std::string pair_str(const PlanarTree& a, const PlanarTree& b) { return a.str() + "; " + b.str(); }

}  // namespace

Report check_bialgebra(int max_degree, const Coproduct& delta) {
  Report report{"bialgebra", 0, {}};
  const auto trees = enumerate_trees(0, max_degree);
  auto d = [&](const PlanarTree& t) { return delta(t); };
  for (const auto& t : trees) {
    TensorVector dt = delta(t);
    Tensor3Vector lhs = map_first(dt, d);
    Tensor3Vector rhs = map_second(dt, d);
    ++report.checked;
    if (lhs != rhs) report.fail("coassociativity", t.str(), format(lhs), format(rhs));

    TreeVector left_counit;
    TreeVector right_counit;
    for (const auto& [p, c] : dt) {
      if (p.first.is_leaf()) left_counit.add(p.second, c);
      if (p.second.is_leaf()) right_counit.add(p.first, c);
    }
    ++report.checked;
    if (left_counit != vec(t)) report.fail("left counit", t.str(), format(left_counit), t.str());
    ++report.checked;
    if (right_counit != vec(t)) report.fail("right counit", t.str(), format(right_counit), t.str());
  }
  for (const auto& t : trees) {
    for (const auto& s : trees) {
      if (t.degree() + s.degree() > max_degree || (t.is_leaf() && s.is_leaf())) continue;
      for (Op op : kPieces) {
        TensorVector lhs = apply_delta(delta, product(op, t, s));
        TensorVector rhs = tensor_op(op, delta(t), delta(s));
        ++report.checked;
        if (lhs != rhs) report.fail("Δ(x" + op_symbol(op) + "y)", pair_str(t, s), format(lhs), format(rhs));
      }
    }
  }
  return report;
}

Report check_32_relations(int max_total_degree) {
  Report report{"(3,2) relations", 0, {}};
  const PlanarTree bar = PlanarTree::leaf();
  const auto trees = enumerate_trees(1, max_total_degree);
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      if (a.degree() + b.degree() > max_total_degree) continue;
      const TensorVector da = reduced_coproduct(a);
      const TensorVector dl = reduced_coproduct_left(b);
      const TensorVector dr = reduced_coproduct_right(b);
      const TensorVector one_a = tens(bar, a);
      const TensorVector a_one = tens(a, bar);
      const TensorVector one_b = tens(bar, b);
      const TensorVector b_one = tens(b, bar);
      auto check = [&](const std::string& name, const TensorVector& lhs, const TensorVector& rhs) {
        ++report.checked;
        if (lhs != rhs) report.fail(name, pair_str(a, b), format(lhs), format(rhs));
      };
      const TreeVector va = vec(a);
      const TreeVector vb = vec(b);
      check("rel1 Δ̃←(a·b)", reduced_coproduct_left(mid(va, vb)),
            componentwise(da, dl, Op::Star, Op::Mid) + componentwise(one_a, dl, Op::Star, Op::Mid));
      check("rel2 Δ̃→(a·b)", reduced_coproduct_right(mid(va, vb)),
            componentwise(da, dr, Op::Star, Op::Mid) + componentwise(da, one_b, Op::Star, Op::Mid) +
                componentwise(one_a, dr, Op::Star, Op::Mid));
      check("rel3 Δ̃←(a≺b)", reduced_coproduct_left(left(va, vb)),
            componentwise(da, dl, Op::Star, Op::Left) + componentwise(da, b_one, Op::Star, Op::Star) +
                componentwise(one_a, dl, Op::Star, Op::Left) + tens(b, a));
      check("rel4 Δ̃→(a≺b)", reduced_coproduct_right(left(va, vb)),
            componentwise(da, dr, Op::Star, Op::Left) + componentwise(da, one_b, Op::Star, Op::Left) +
                componentwise(one_a, dr, Op::Star, Op::Left));
      check("rel5 Δ̃→(a≻b)", reduced_coproduct_right(right(va, vb)),
            componentwise(da, dr, Op::Star, Op::Right) + componentwise(da, one_b, Op::Star, Op::Right) +
                componentwise(one_a, dr, Op::Star, Op::Right) + componentwise(a_one, dr, Op::Star, Op::Star) +
                tens(a, b));
      check("rel6 Δ̃←(a≻b)", reduced_coproduct_left(right(va, vb)),
            componentwise(da, dl, Op::Star, Op::Right) + componentwise(a_one, dl, Op::Star, Op::Star) +
                componentwise(one_a, dl, Op::Star, Op::Right));
    }
  }
  auto rl = [](const PlanarTree& t) { return reduced_coproduct_left(t); };
  auto rr = [](const PlanarTree& t) { return reduced_coproduct_right(t); };
  auto rf = [](const PlanarTree& t) { return reduced_coproduct(t); };
  for (const auto& t : trees) {
    auto check = [&](const std::string& name, const Tensor3Vector& lhs, const Tensor3Vector& rhs) {
      ++report.checked;
      if (lhs != rhs) report.fail(name, t.str(), format(lhs), format(rhs));
    };
    const TensorVector l = rl(t);
    const TensorVector r = rr(t);
    check("codendri1", map_first(l, rl), map_second(l, rf));
    check("codendri2", map_first(l, rr), map_second(r, rl));
    check("codendri3", map_first(r, rf), map_second(r, rr));
  }
  return report;
}

Report check_coproduct_identities(int max_total_degree) {
  Report report{"coproduct identities", 0, {}};
  const PlanarTree bar = PlanarTree::leaf();
  const auto trees = enumerate_trees(1, max_total_degree);
  for (const auto& t : trees) {
    const TensorVector d = coproduct(t);
    bool graded = std::all_of(d.begin(), d.end(), [&](const auto& term) {
      return term.first.first.degree() + term.first.second.degree() == t.degree();
    });
    ++report.checked;
    if (!graded) report.fail("grading", t.str(), format(d), "degree " + std::to_string(t.degree()));
    const TensorVector halves = coproduct_left(t) + coproduct_right(t);
    ++report.checked;
    if (halves != d) report.fail("Δ=Δ←+Δ→", t.str(), format(d), format(halves));
    TreeVector right_counit;
    for (const auto& [p, c] : coproduct_left(t)) {
      if (p.second.is_leaf()) right_counit.add(p.first, c);
    }
    TreeVector left_counit;
    for (const auto& [p, c] : coproduct_right(t)) {
      if (p.first.is_leaf()) left_counit.add(p.second, c);
    }
    ++report.checked;
    if (right_counit != vec(t)) report.fail("(Id⊗ε)Δ←", t.str(), format(right_counit), t.str());
    ++report.checked;
    if (left_counit != vec(t)) report.fail("(ε⊗Id)Δ→", t.str(), format(left_counit), t.str());
  }
  for (const auto& t : trees) {
    for (const auto& s : trees) {
      if (t.degree() + s.degree() > max_total_degree) continue;
      const TensorVector dt = reduced_coproduct(t);
      const TensorVector ds = reduced_coproduct(s);
      const TensorVector one_t = tens(bar, t);
      const TensorVector one_s = tens(bar, s);
      auto check = [&](const std::string& name, const TensorVector& lhs, const TensorVector& rhs) {
        ++report.checked;
        if (lhs != rhs) report.fail(name, pair_str(t, s), format(lhs), format(rhs));
      };
      check("Δ̃(t·s)", reduced_coproduct(mid(vec(t), vec(s))),
            tensor_op(Op::Mid, dt, ds) + tensor_op(Op::Mid, one_t, ds) + tensor_op(Op::Mid, dt, one_s));
      check("Δ̃(t≺s)", reduced_coproduct(left(vec(t), vec(s))),
            tens(s, t) + tensor_op(Op::Left, one_t, ds) + tensor_op(Op::Left, dt, one_s) +
                tensor_op(Op::Star, dt, tens(s, bar)) + tensor_op(Op::Left, dt, ds));
      check("Δ̃(t≻s)", reduced_coproduct(right(vec(t), vec(s))),
            tens(t, s) + tensor_op(Op::Right, one_t, ds) + tensor_op(Op::Star, tens(t, bar), ds) +
                tensor_op(Op::Right, dt, one_s) + tensor_op(Op::Right, dt, ds));
    }
  }
  return report;
}

}  // namespace tridend
