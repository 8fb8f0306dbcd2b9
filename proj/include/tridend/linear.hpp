#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tridend/tree.hpp"

namespace tridend {

using Rational = mpq_class;

/// Finite formal linear combination over an ordered basis. Zero coefficients
/// are never stored, so equality is plain map equality.
template <class Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, Rational>;

  LinearCombination() = default;
  explicit LinearCombination(const Key& key, const Rational& coef = 1) { add(key, coef); }

  void add(const Key& key, const Rational& coef) {
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty(); }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

using TreeVector = LinearCombination<PlanarTree>;
using Tensor = std::pair<PlanarTree, PlanarTree>;
using TensorVector = LinearCombination<Tensor>;
using Tensor3 = std::array<PlanarTree, 3>;
using Tensor3Vector = LinearCombination<Tensor3>;

inline TreeVector vec(const PlanarTree& t) { return TreeVector(t); }
inline TreeVector vec(std::string_view tree_literal) { return TreeVector(PlanarTree::parse(tree_literal)); }
inline TensorVector tens(const PlanarTree& a, const PlanarTree& b) { return TensorVector({a, b}); }

/// x ⊗ y for vectors.
TensorVector tensor(const TreeVector& x, const TreeVector& y);

/// Extends f: tree -> Out linearly to x.
template <class Out, class Key, class F>
Out linear_extend(const LinearCombination<Key>& x, F&& f) {
  Out out;
  for (const auto& [k, c] : x) {
    Out part = f(k);
    part *= c;
    out += part;
  }
  return out;
}

/// Extends f: (tree, tree) -> Out bilinearly.
template <class Out, class KeyA, class KeyB, class F>
Out bilinear_extend(const LinearCombination<KeyA>& x, const LinearCombination<KeyB>& y, F&& f) {
  Out out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      Out part = f(a, b);
      part *= ca * cb;
      out += part;
    }
  }
  return out;
}

/// Kronecker pairing on trees, extended bilinearly.
Rational pairing(const TreeVector& x, const TreeVector& y);
Rational pairing(const TensorVector& x, const TensorVector& y);

/// Homogeneous component of degree n.
TreeVector degree_part(const TreeVector& x, int n);

std::string format_rational(const Rational& q);
std::string format(const TreeVector& x);
std::string format(const TensorVector& x);
std::string format(const Tensor3Vector& x);

/// Parses "c/d*TREE + ... - ..."; a bare tree is coefficient 1 and "0" is
/// the zero vector. Accepts the unicode minus sign.
TreeVector parse_vector(std::string_view text);

using SparseRow = std::map<int, Rational>;

/// Rational matrix stored by rows.
class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols);

  static SparseMatrix identity(int n);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  void set(int r, int c, const Rational& v);
  void add(int r, int c, const Rational& v);
  Rational at(int r, int c) const;
  const SparseRow& row(int r) const { return rows_.at(static_cast<std::size_t>(r)); }
  /// Appends another matrix with the same column count below this one.
  void append_rows(const SparseMatrix& other);
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

 private:
  int cols_;
  std::vector<SparseRow> rows_;
};

/// Reduced row echelon form built one row at a time. Pivots are the
/// leftmost nonzero columns, so the basis it yields is unique.
class RowEchelon {
 public:
  explicit RowEchelon(int cols) : cols_(cols) {}

  /// Returns true if the row was independent of the rows seen so far.
  bool insert(SparseRow row);
  int rank() const { return static_cast<int>(pivot_rows_.size()); }
  int cols() const { return cols_; }
  const std::map<int, SparseRow>& pivot_rows() const { return pivot_rows_; }
  /// Kernel basis: one vector per free column in ascending order, with a 1
  /// in that column.
  std::vector<std::vector<Rational>> kernel_basis() const;

 private:
  int cols_;
  std::map<int, SparseRow> pivot_rows_;
};

RowEchelon row_echelon(const SparseMatrix& m);
int rank(const SparseMatrix& m);
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m);

/// Rank of a family of tree vectors.
int rank(const std::vector<TreeVector>& family);

/// Whether v lies in the span of the family.
bool in_span(const std::vector<TreeVector>& family, const TreeVector& v);

}  // namespace tridend
