#include "tridend/products.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace tridend {

std::string op_symbol(Op op) {
  switch (op) {
    case Op::Star: return "*";
    case Op::Left: return "≺";
    case Op::Mid: return "·";
    case Op::Right: return "≻";
  }
  return "?";
}

Op parse_op(const std::string& name) {
  if (name == "star") return Op::Star;
  if (name == "left") return Op::Left;
  if (name == "mid") return Op::Mid;
  if (name == "right") return Op::Right;
  throw ParseError("unknown product '" + name + "' (expected star, left, mid or right)");
}

int QuasiShuffle::n() const { return values.empty() ? 0 : *std::max_element(values.begin(), values.end()); }

Op QuasiShuffle::piece() const {
  const bool first = values.at(0) == 1;
  const bool second = values.at(static_cast<std::size_t>(k)) == 1;
  if (first && second) return Op::Mid;
  return first ? Op::Left : Op::Right;
}

namespace {

void qsh_fill(int k, int l, std::vector<int>& values, std::vector<QuasiShuffle>& out) {
  const int total = k + l;
  const int pos = static_cast<int>(values.size());
  if (pos == total) {
    const int n = *std::max_element(values.begin(), values.end());
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    for (int v : values) hit[static_cast<std::size_t>(v)] = true;
    if (std::all_of(hit.begin() + 1, hit.end(), [](bool b) { return b; })) out.push_back({k, l, values});
    return;
  }
  const int low = (pos == 0 || pos == k) ? 1 : values.back() + 1;
  for (int v = low; v <= total; ++v) {
    values.push_back(v);
    qsh_fill(k, l, values, out);
    values.pop_back();
  }
}

struct TripleKey {
  int op;
  PlanarTree a;
  PlanarTree b;
  bool operator==(const TripleKey&) const = default;
};

struct TripleKeyHash {
  std::size_t operator()(const TripleKey& k) const noexcept {
    return (k.a.hash() * 1000003u) ^ (k.b.hash() * 31u) ^ static_cast<std::size_t>(k.op);
  }
};

class ProductCache {
 public:
  template <class F>
  TreeVector get(Op op, const PlanarTree& a, const PlanarTree& b, F&& compute) {
    TripleKey key{static_cast<int>(op), a, b};
    {
      std::lock_guard lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    TreeVector value = compute();
    std::lock_guard lock(mutex_);
    map_.emplace(std::move(key), value);
    return value;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<TripleKey, TreeVector, TripleKeyHash> map_;
};

// Returns true and sets `out` when a unit is involved.
bool unit_product(Op op, const PlanarTree& t, const PlanarTree& s, TreeVector& out) {
  if (!t.is_leaf() && !s.is_leaf()) return false;
  if (t.is_leaf() && s.is_leaf() && op != Op::Star) {
    throw DomainError("| " + op_symbol(op) + " | is undefined");
  }
  out = TreeVector();
  switch (op) {
    case Op::Star: out = TreeVector(t.is_leaf() ? s : t); break;
    case Op::Left: if (s.is_leaf()) out = TreeVector(t); break;
    case Op::Mid: break;
    case Op::Right: if (t.is_leaf()) out = TreeVector(s); break;
  }
  return true;
}

// before ∨ slot ∨ after, extended linearly in the slot.
TreeVector graft_slot(const Forest& before, const TreeVector& slot, const Forest& after) {
  TreeVector out;
  for (const auto& [t, c] : slot) {
    Forest kids = before;
    kids.push_back(t);
    kids.insert(kids.end(), after.begin(), after.end());
    out.add(PlanarTree::graft(std::move(kids)), c);
  }
  return out;
}

}  // namespace

std::vector<QuasiShuffle> enumerate_qsh(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("enumerate_qsh: block sizes must be positive");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<QuasiShuffle>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({k, l});
  if (it != cache.end()) return it->second;
  std::vector<QuasiShuffle> out;
  std::vector<int> values;
  qsh_fill(k, l, values, out);
  cache.emplace(std::make_pair(k, l), out);
  return out;
}

namespace {

PlanarTree ladder(const QuasiShuffle& sigma, const std::vector<Forest>& left_forests,
                  const std::vector<Forest>& right_forests) {
  const int n = sigma.n();
  std::vector<const Forest*> on_left(static_cast<std::size_t>(n) + 1, nullptr);
  std::vector<const Forest*> on_right(static_cast<std::size_t>(n) + 1, nullptr);
  for (int j = 0; j < sigma.k; ++j) on_left[static_cast<std::size_t>(sigma.values[static_cast<std::size_t>(j)])] = &left_forests[static_cast<std::size_t>(j)];
  for (int j = 0; j < sigma.l; ++j) {
    on_right[static_cast<std::size_t>(sigma.values[static_cast<std::size_t>(sigma.k + j)])] = &right_forests[static_cast<std::size_t>(j)];
  }
  PlanarTree top = PlanarTree::leaf();
  for (int i = n; i >= 1; --i) {
    Forest kids;
    if (on_left[static_cast<std::size_t>(i)]) kids = *on_left[static_cast<std::size_t>(i)];
    kids.push_back(top);
    if (on_right[static_cast<std::size_t>(i)]) {
      const Forest& f = *on_right[static_cast<std::size_t>(i)];
      kids.insert(kids.end(), f.begin(), f.end());
    }
    top = PlanarTree::graft(std::move(kids));
  }
  return top;
}

}  // namespace

PlanarTree apply_qsh(const QuasiShuffle& sigma, const PlanarTree& t, const PlanarTree& s) {
  if (t.is_leaf() || s.is_leaf()) throw std::invalid_argument("apply_qsh: trees must not be the unit");
  auto lf = right_comb_decomposition(t);
  auto rf = left_comb_decomposition(s);
  if (static_cast<int>(lf.size()) != sigma.k || static_cast<int>(rf.size()) != sigma.l ||
      static_cast<int>(sigma.values.size()) != sigma.k + sigma.l) {
    throw std::invalid_argument("apply_qsh: block sizes do not match the comb decompositions");
  }
  return ladder(sigma, lf, rf);
}

TreeVector product(Op op, const PlanarTree& t, const PlanarTree& s) {
  TreeVector out;
  if (unit_product(op, t, s, out)) return out;
  static ProductCache cache;
  return cache.get(op, t, s, [&] {
    auto lf = right_comb_decomposition(t);
    auto rf = left_comb_decomposition(s);
    TreeVector sum;
    for (const auto& sigma : enumerate_qsh(static_cast<int>(lf.size()), static_cast<int>(rf.size()))) {
      if (op == Op::Star || sigma.piece() == op) sum.add(ladder(sigma, lf, rf), 1);
    }
    return sum;
  });
}

TreeVector product(Op op, const TreeVector& x, const TreeVector& y) {
  return bilinear_extend<TreeVector>(x, y, [op](const PlanarTree& a, const PlanarTree& b) { return product(op, a, b); });
}

TreeVector product_inductive(Op op, const PlanarTree& x, const PlanarTree& y) {
  if (x.is_leaf() || y.is_leaf()) {
    if (x.is_leaf() && y.is_leaf() && op != Op::Star) throw DomainError("| " + op_symbol(op) + " | is undefined");
    if (op == Op::Star) return TreeVector(x.is_leaf() ? y : x);
    if (op == Op::Left) return y.is_leaf() ? TreeVector(x) : TreeVector();
    if (op == Op::Right) return x.is_leaf() ? TreeVector(y) : TreeVector();
    return TreeVector();
  }
  static ProductCache cache;
  return cache.get(op, x, y, [&] {
    auto xs = x.children();
    auto ys = y.children();
    const Forest x_init(xs.begin(), xs.end() - 1);
    const Forest y_tail(ys.begin() + 1, ys.end());
    auto left_part = [&] { return graft_slot(x_init, product_inductive(Op::Star, xs.back(), y), {}); };
    auto mid_part = [&] { return graft_slot(x_init, product_inductive(Op::Star, xs.back(), ys.front()), y_tail); };
    auto right_part = [&] { return graft_slot({}, product_inductive(Op::Star, x, ys.front()), y_tail); };
    switch (op) {
      case Op::Left: return left_part();
      case Op::Mid: return mid_part();
      case Op::Right: return right_part();
      case Op::Star: break;
    }
    return left_part() + mid_part() + right_part();
  });
}

TreeVector product_inductive(Op op, const TreeVector& x, const TreeVector& y) {
  return bilinear_extend<TreeVector>(
      x, y, [op](const PlanarTree& a, const PlanarTree& b) { return product_inductive(op, a, b); });
}

TreeProduct standard_product() {
  return [](Op op, const PlanarTree& a, const PlanarTree& b) { return product(op, a, b); };
}

TreeVector apply_product(const TreeProduct& prod, Op op, const TreeVector& x, const TreeVector& y) {
  return bilinear_extend<TreeVector>(x, y, [&](const PlanarTree& a, const PlanarTree& b) { return prod(op, a, b); });
}

const std::vector<Relation>& tridend_relations() {
  static const std::vector<Relation> rels{
      {"tri1", Op::Left, Op::Left, Op::Left, Op::Star},
      {"tri2", Op::Right, Op::Left, Op::Right, Op::Left},
      {"tri3", Op::Star, Op::Right, Op::Right, Op::Right},
      {"tri4", Op::Right, Op::Mid, Op::Right, Op::Mid},
      {"tri5", Op::Left, Op::Mid, Op::Mid, Op::Right},
      {"tri6", Op::Mid, Op::Left, Op::Mid, Op::Left},
      {"tri7", Op::Mid, Op::Mid, Op::Mid, Op::Mid},
  };
  return rels;
}

namespace {

std::string triple_str(const PlanarTree& a, const PlanarTree& b, const PlanarTree& c) {
  return a.str() + "; " + b.str() + "; " + c.str();
}

}  // namespace

Report check_tridend_axioms(int max_total_degree, const TreeProduct& prod) {
  Report report{"tridendriform relations", 0, {}};
  const auto trees = enumerate_trees(1, max_total_degree);
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      if (a.degree() + b.degree() + 1 > max_total_degree) continue;
      for (const auto& c : trees) {
        if (a.degree() + b.degree() + c.degree() > max_total_degree) continue;
        for (const auto& rel : tridend_relations()) {
          TreeVector lhs = apply_product(prod, rel.outer_left, prod(rel.inner_left, a, b), vec(c));
          TreeVector rhs = apply_product(prod, rel.outer_right, vec(a), prod(rel.inner_right, b, c));
          ++report.checked;
          if (lhs != rhs) report.fail(rel.name, triple_str(a, b, c), format(lhs), format(rhs));
        }
      }
    }
  }
  return report;
}

Report check_product_equivalence(int max_total_degree) {
  Report report{"quasi-shuffle vs inductive products", 0, {}};
  const auto trees = enumerate_trees(0, max_total_degree);
  for (const auto& t : trees) {
    for (const auto& s : trees) {
      if (t.degree() + s.degree() > max_total_degree) continue;
      const std::string inputs = t.str() + "; " + s.str();
      const bool both_units = t.is_leaf() && s.is_leaf();
      for (Op op : {Op::Star, Op::Left, Op::Mid, Op::Right}) {
        if (both_units && op != Op::Star) continue;
        TreeVector a = product(op, t, s);
        TreeVector b = product_inductive(op, t, s);
        ++report.checked;
        if (a != b) report.fail("qsh=inductive " + op_symbol(op), inputs, format(a), format(b));
      }
      if (!both_units) {
        TreeVector whole = product(Op::Star, t, s);
        TreeVector parts = product(Op::Left, t, s) + product(Op::Mid, t, s) + product(Op::Right, t, s);
        ++report.checked;
        if (whole != parts) report.fail("*=≺+·+≻", inputs, format(whole), format(parts));
      }
      for (const auto& u : trees) {
        if (t.degree() + s.degree() + u.degree() > max_total_degree) continue;
        TreeVector lhs = star(product(Op::Star, t, s), vec(u));
        TreeVector rhs = star(vec(t), product(Op::Star, s, u));
        ++report.checked;
        if (lhs != rhs) report.fail("associativity of *", triple_str(t, s, u), format(lhs), format(rhs));
      }
    }
  }
  return report;
}

Report check_qsh_injectivity(int max_total_degree) {
  Report report{"quasi-shuffle injectivity", 0, {}};
  const auto trees = enumerate_trees(1, max_total_degree);
  for (const auto& t : trees) {
    for (const auto& s : trees) {
      if (t.degree() + s.degree() > max_total_degree) continue;
      auto lf = right_comb_decomposition(t);
      auto rf = left_comb_decomposition(s);
      std::set<PlanarTree> seen;
      std::size_t count = 0;
      for (const auto& sigma : enumerate_qsh(static_cast<int>(lf.size()), static_cast<int>(rf.size()))) {
        seen.insert(apply_qsh(sigma, t, s));
        ++count;
      }
      ++report.checked;
      if (seen.size() != count) {
        report.fail("injectivity", t.str() + "; " + s.str(), std::to_string(count) + " quasi-shuffles",
                    std::to_string(seen.size()) + " distinct trees");
      }
    }
  }
  return report;
}

struct Expr::Node {
  Op op;
  Expr lhs;
  Expr rhs;
};

Expr Expr::gen() { return Expr(); }

Expr Expr::apply(Op op, Expr lhs, Expr rhs) {
  if (op == Op::Star) throw std::invalid_argument("Expr: only the three pieces are allowed");
  Expr e;
  e.node_ = std::make_shared<const Node>(Node{op, std::move(lhs), std::move(rhs)});
  return e;
}

Op Expr::op() const {
  if (!node_) throw std::logic_error("Expr: generator has no operation");
  return node_->op;
}

const Expr& Expr::lhs() const {
  if (!node_) throw std::logic_error("Expr: generator has no operands");
  return node_->lhs;
}

const Expr& Expr::rhs() const {
  if (!node_) throw std::logic_error("Expr: generator has no operands");
  return node_->rhs;
}

std::string Expr::str() const {
  if (is_gen()) return "g";
  auto operand = [this](const Expr& e) {
    // · is associative, so chains of it need no brackets.
    if (e.is_gen() || (e.op() == Op::Mid && op() == Op::Mid)) return e.str();
    return "(" + e.str() + ")";
  };
  return operand(lhs()) + op_symbol(op()) + operand(rhs());
}

TreeVector Expr::evaluate() const {
  if (is_gen()) return vec(generator());
  return product(op(), lhs().evaluate(), rhs().evaluate());
}

Expr express_in_generator(const PlanarTree& t) {
  if (t.is_leaf()) throw std::invalid_argument("express_in_generator: the unit is not generated by Y");
  auto kids = t.children();
  const std::size_t k = kids.size() - 1;
  const PlanarTree bar = PlanarTree::leaf();
  if (std::all_of(kids.begin(), kids.end(), [](const PlanarTree& c) { return c.is_leaf(); })) {
    if (k == 1) return Expr::gen();
    return Expr::apply(Op::Mid, Expr::gen(), express_in_generator(corolla(static_cast<int>(k) - 1)));
  }
  if (!kids.front().is_leaf()) {
    Forest rest{bar};
    rest.insert(rest.end(), kids.begin() + 1, kids.end());
    return Expr::apply(Op::Right, express_in_generator(kids.front()),
                       express_in_generator(PlanarTree::graft(std::move(rest))));
  }
  if (!kids.back().is_leaf()) {
    Forest rest(kids.begin(), kids.end() - 1);
    rest.push_back(bar);
    return Expr::apply(Op::Left, express_in_generator(PlanarTree::graft(std::move(rest))),
                       express_in_generator(kids.back()));
  }
  std::size_t i = 1;
  while (kids[i].is_leaf()) ++i;
  Forest head(kids.begin(), kids.begin() + static_cast<std::ptrdiff_t>(i));
  head.push_back(bar);
  Forest tail(kids.begin() + static_cast<std::ptrdiff_t>(i), kids.end());
  return Expr::apply(Op::Mid, express_in_generator(PlanarTree::graft(std::move(head))),
                     express_in_generator(PlanarTree::graft(std::move(tail))));
}

}  // namespace tridend
