#include "tridend/quotient.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace tridend {

TreeVector project_lr(const TreeVector& x) {
  TreeVector out;
  for (const auto& [t, c] : x) {
    if (is_binary(t)) out.add(t, c);
  }
  return out;
}

TensorVector project_lr(const TensorVector& x) {
  TensorVector out;
  for (const auto& [p, c] : x) {
    if (is_binary(p.first) && is_binary(p.second)) out.add(p, c);
  }
  return out;
}

namespace {

void require_binary(const PlanarTree& t, const char* what) {
  if (!is_binary(t)) throw std::invalid_argument(std::string(what) + ": " + t.str() + " is not a binary tree");
}

PlanarTree graft2(const PlanarTree& a, const PlanarTree& b) { return PlanarTree::graft({a, b}); }

TreeVector graft_left(const PlanarTree& a, const TreeVector& right) {
  TreeVector out;
  for (const auto& [b, c] : right) out.add(graft2(a, b), c);
  return out;
}

TreeVector graft_right(const TreeVector& left, const PlanarTree& b) {
  TreeVector out;
  for (const auto& [a, c] : left) out.add(graft2(a, b), c);
  return out;
}

}  // namespace

TreeVector lr_product(const PlanarTree& t, const PlanarTree& s) {
  require_binary(t, "lr_product");
  require_binary(s, "lr_product");
  return project_lr(product(Op::Star, t, s));
}

TreeVector lr_product(const TreeVector& x, const TreeVector& y) {
  return bilinear_extend<TreeVector>(x, y, [](const PlanarTree& a, const PlanarTree& b) { return lr_product(a, b); });
}

TensorVector lr_coproduct(const PlanarTree& t) {
  require_binary(t, "lr_coproduct");
  return project_lr(coproduct(t));
}

TensorVector lr_coproduct(const TreeVector& x) {
  return linear_extend<TensorVector>(x, [](const PlanarTree& t) { return lr_coproduct(t); });
}

std::string reading_name(LrReading reading) {
  return reading == LrReading::Printed ? "t1∨(t1'*t2) + (t*t1')∨t2'" : "t1∨(t2*t') + (t*t1')∨t2'";
}

TreeVector lr_product_recursive(const PlanarTree& t, const PlanarTree& s, LrReading reading) {
  require_binary(t, "lr_product_recursive");
  require_binary(s, "lr_product_recursive");
  if (t.is_leaf()) return vec(s);
  if (s.is_leaf()) return vec(t);
  const PlanarTree& t1 = t.children()[0];
  const PlanarTree& t2 = t.children()[1];
  const PlanarTree& s1 = s.children()[0];
  const PlanarTree& s2 = s.children()[1];
  TreeVector first = reading == LrReading::Printed ? lr_product_recursive(s1, t2, reading)
                                                   : lr_product_recursive(t2, s, reading);
  return graft_left(t1, first) + graft_right(lr_product_recursive(t, s1, reading), s2);
}

TensorVector lr_coproduct_recursive(const PlanarTree& t) {
  require_binary(t, "lr_coproduct_recursive");
  if (t.is_leaf()) return tens(t, t);
  TensorVector out = tens(t, PlanarTree::leaf());
  const TensorVector d1 = lr_coproduct_recursive(t.children()[0]);
  const TensorVector d2 = lr_coproduct_recursive(t.children()[1]);
  for (const auto& [p, cp] : d1) {
    for (const auto& [q, cq] : d2) {
      const PlanarTree top = graft2(p.second, q.second);
      for (const auto& [u, cu] : lr_product(p.first, q.first)) out.add({u, top}, cp * cq * cu);
    }
  }
  return out;
}

namespace {

bool in_coideal(const TensorVector& x) {
  for (const auto& [p, c] : x) {
    if (is_binary(p.first) && is_binary(p.second)) return false;
  }
  return true;
}

std::string pair_str(const PlanarTree& a, const PlanarTree& b) { return a.str() + "; " + b.str(); }

}  // namespace

Report check_biideal(int max_degree) {
  Report report{"biideal", 0, {}};
  const auto trees = enumerate_trees(0, max_degree);
  for (const auto& t : trees) {
    if (is_binary(t)) continue;
    for (auto [name, d] : {std::pair{"Δ(I) ⊆ I⊗A + A⊗I", coproduct(t)},
                           std::pair{"Δ←(I) ⊆ I⊗A + A⊗I", coproduct_left(t)},
                           std::pair{"Δ→(I) ⊆ I⊗A + A⊗I", coproduct_right(t)}}) {
      ++report.checked;
      if (!in_coideal(d)) report.fail(name, t.str(), format(project_lr(d)), "0");
    }
  }
  for (const auto& t : trees) {
    for (const auto& s : trees) {
      if (t.is_leaf() || s.is_leaf() || t.degree() + s.degree() > max_degree) continue;
      TreeVector m = project_lr(product(Op::Mid, t, s));
      ++report.checked;
      if (!m.empty()) report.fail("π(x·y) = 0", pair_str(t, s), format(m), "0");
      TreeVector whole = project_lr(product(Op::Star, t, s));
      TreeVector parts = project_lr(product(Op::Left, t, s) + product(Op::Right, t, s));
      ++report.checked;
      if (whole != parts) report.fail("π(x*y) = π(x≺y) + π(x≻y)", pair_str(t, s), format(whole), format(parts));
    }
  }
  return report;
}

Report check_lr_formulas(int max_degree) {
  Report report{"Loday-Ronco quotient", 0, {}};
  std::vector<PlanarTree> binary;
  std::vector<PlanarTree> all = enumerate_trees(0, max_degree);
  for (const auto& t : all) {
    if (is_binary(t)) binary.push_back(t);
  }
  auto check = [&](const std::string& law, const std::string& inputs, const auto& lhs, const auto& rhs) {
    ++report.checked;
    if (lhs != rhs) report.fail(law, inputs, format(lhs), format(rhs));
  };
  auto lr_delta = [](const PlanarTree& t) { return lr_coproduct(t); };
  for (const auto& t : binary) {
    check("recursive coproduct", t.str(), lr_coproduct(t), lr_coproduct_recursive(t));
    const TensorVector d = lr_coproduct(t);
    check("coassociativity", t.str(), map_first(d, lr_delta), map_second(d, lr_delta));
  }
  auto lr_mul = [](const PlanarTree& a, const PlanarTree& b) { return lr_product(a, b); };
  for (const auto& t : binary) {
    for (const auto& s : binary) {
      if (t.degree() + s.degree() > max_degree) continue;
      const std::string inputs = pair_str(t, s);
      check("multiplicativity", inputs, lr_coproduct(lr_product(t, s)),
            componentwise(lr_coproduct(t), lr_coproduct(s), lr_mul, lr_mul));
      for (const auto& u : binary) {
        if (t.degree() + s.degree() + u.degree() > max_degree) continue;
        check("associativity", inputs + "; " + u.str(), lr_product(lr_product(t, s), vec(u)),
              lr_product(vec(t), lr_product(s, u)));
      }
    }
  }
  // π(x*y) only depends on π(x) and π(y): changing x by a non-binary tree
  // of the same degree does not move π(x*y).
  for (const auto& x : all) {
    if (is_binary(x)) continue;
    for (const auto& y : all) {
      if (x.degree() + y.degree() > max_degree) continue;
      check("π(I*y) = 0", pair_str(x, y), project_lr(product(Op::Star, x, y)), TreeVector());
      check("π(y*I) = 0", pair_str(y, x), project_lr(product(Op::Star, y, x)), TreeVector());
    }
  }
  return report;
}

LrReadingComparison compare_lr_readings(int max_total_degree) {
  LrReadingComparison out{{"printed LR product reading", 0, {}}, {"standard LR product reading", 0, {}}};
  std::vector<PlanarTree> binary;
  for (const auto& t : enumerate_trees(0, max_total_degree)) {
    if (is_binary(t)) binary.push_back(t);
  }
  for (const auto& t : binary) {
    for (const auto& s : binary) {
      if (t.degree() + s.degree() > max_total_degree) continue;
      const TreeVector truth = lr_product(t, s);
      for (auto [reading, report] : {std::pair{LrReading::Printed, &out.printed},
                                     std::pair{LrReading::Standard, &out.standard}}) {
        TreeVector got = lr_product_recursive(t, s, reading);
        ++report->checked;
        if (got != truth) report->fail(reading_name(reading), pair_str(t, s), format(got), format(truth));
      }
    }
  }
  return out;
}

}  // namespace tridend
