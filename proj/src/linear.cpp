#include "tridend/linear.hpp"

#include <cctype>
#include <stdexcept>

namespace tridend {

TensorVector tensor(const TreeVector& x, const TreeVector& y) {
  TensorVector out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) out.add({a, b}, ca * cb);
  }
  return out;
}

Rational pairing(const TreeVector& x, const TreeVector& y) {
  Rational sum = 0;
  for (const auto& [t, c] : x) sum += c * y.coeff(t);
  return sum;
}

Rational pairing(const TensorVector& x, const TensorVector& y) {
  Rational sum = 0;
  for (const auto& [t, c] : x) sum += c * y.coeff(t);
  return sum;
}

TreeVector degree_part(const TreeVector& x, int n) {
  TreeVector out;
  for (const auto& [t, c] : x) {
    if (t.degree() == n) out.add(t, c);
  }
  return out;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

namespace {

template <class Key, class Render>
std::string format_terms(const LinearCombination<Key>& x, Render&& render) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : x) {
    if (!out.empty()) out += " + ";
    out += format_rational(c);
    out += '*';
    out += render(k);
  }
  return out;
}

}  // namespace

std::string format(const TreeVector& x) {
  return format_terms(x, [](const PlanarTree& t) { return t.str(); });
}

std::string format(const TensorVector& x) {
  return format_terms(x, [](const Tensor& t) { return t.first.str() + "⊗" + t.second.str(); });
}

std::string format(const Tensor3Vector& x) {
  return format_terms(x, [](const Tensor3& t) { return t[0].str() + "⊗" + t[1].str() + "⊗" + t[2].str(); });
}

namespace {

class VectorParser {
 public:
  explicit VectorParser(std::string_view text) : text_(text) {}

  TreeVector parse() {
    TreeVector out;
    skip_ws();
    if (pos_ == text_.size()) fail("empty vector literal");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (!first) {
        if (!take_sign(sign)) fail("expected '+' or '-' between terms");
      } else {
        take_sign(sign);
      }
      skip_ws();
      // Further signs may precede the coefficient, as in "+ -1/2*T".
      int extra = 1;
      while (take_sign(extra)) {
        sign *= extra;
        extra = 1;
        skip_ws();
      }
      Rational coef = 1;
      bool has_coef = false;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        coef = read_rational();
        has_coef = true;
        skip_ws();
      }
      if (has_coef) {
        if (pos_ < text_.size() && text_[pos_] == '*') {
          ++pos_;
          skip_ws();
        } else if (coef == 0 && first && at_end_after_ws()) {
          return out;
        } else {
          fail("expected '*' after coefficient");
        }
      }
      PlanarTree t = PlanarTree::parse(read_tree_text());
      out.add(t, sign * coef);
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  bool at_end_after_ws() {
    skip_ws();
    return pos_ == text_.size();
  }

  bool take_sign(int& sign) {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    if (text_[pos_] == '+') {
      ++pos_;
      return true;
    }
    if (text_[pos_] == '-') {
      ++pos_;
      sign = -sign;
      return true;
    }
    static constexpr std::string_view kMinus = "−";
    if (text_.substr(pos_, kMinus.size()) == kMinus) {
      pos_ += kMinus.size();
      sign = -sign;
      return true;
    }
    return false;
  }

  Rational read_rational() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (den_start == pos_) fail("missing denominator");
    }
    Rational q;
    if (q.set_str(std::string(text_.substr(start, pos_ - start)), 10) != 0) fail("bad coefficient");
    if (q.get_den() == 0) fail("zero denominator");
    q.canonicalize();
    return q;
  }

  std::string_view read_tree_text() {
    if (pos_ >= text_.size()) fail("expected a tree");
    std::size_t start = pos_;
    if (text_[pos_] == '|') {
      ++pos_;
      return text_.substr(start, 1);
    }
    if (text_[pos_] != '(') fail("expected a tree");
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_++];
      if (c == '(') ++depth;
      if (c == ')' && --depth == 0) return text_.substr(start, pos_ - start);
    }
    fail("unbalanced parentheses");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("vector literal '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TreeVector parse_vector(std::string_view text) { return VectorParser(text).parse(); }

SparseMatrix::SparseMatrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMatrix: negative size");
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
  if (c < 0 || c >= cols_) throw std::out_of_range("SparseMatrix: column out of range");
  auto& row = rows_.at(static_cast<std::size_t>(r));
  if (v == 0) {
    row.erase(c);
  } else {
    row[c] = v;
  }
}

void SparseMatrix::add(int r, int c, const Rational& v) { set(r, c, at(r, c) + v); }

Rational SparseMatrix::at(int r, int c) const {
  const auto& row = rows_.at(static_cast<std::size_t>(r));
  auto it = row.find(c);
  return it == row.end() ? Rational(0) : it->second;
}

void SparseMatrix::append_rows(const SparseMatrix& other) {
  if (other.cols_ != cols_) throw std::invalid_argument("append_rows: column mismatch");
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
  std::vector<Rational> out(rows_.size(), Rational(0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, x] : rows_[r]) out[r] += x * v[static_cast<std::size_t>(c)];
  }
  return out;
}

namespace {

// row -= factor * other, dropping cancelled entries.
void axpy(SparseRow& row, const Rational& factor, const SparseRow& other) {
  for (const auto& [c, x] : other) {
    auto [it, inserted] = row.try_emplace(c, 0);
    it->second -= factor * x;
    if (it->second == 0) row.erase(it);
  }
}

}  // namespace

bool RowEchelon::insert(SparseRow row) {
  // Pivot rows vanish on every other pivot column, so one pass over the
  // pivots present in the incoming row clears all of them.
  std::vector<std::pair<int, Rational>> hits;
  for (const auto& [c, x] : row) {
    if (pivot_rows_.count(c)) hits.emplace_back(c, x);
  }
  for (const auto& [c, x] : hits) axpy(row, x, pivot_rows_.at(c));
  if (row.empty()) return false;

  const int pivot = row.begin()->first;
  const Rational lead = row.begin()->second;
  for (auto& [c, x] : row) x /= lead;
  for (auto& [p, other] : pivot_rows_) {
    auto it = other.find(pivot);
    if (it == other.end()) continue;
    Rational factor = it->second;
    axpy(other, factor, row);
  }
  pivot_rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<std::vector<Rational>> RowEchelon::kernel_basis() const {
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (pivot_rows_.count(f)) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols_), Rational(0));
    v[static_cast<std::size_t>(f)] = 1;
    for (const auto& [p, row] : pivot_rows_) {
      auto it = row.find(f);
      if (it != row.end()) v[static_cast<std::size_t>(p)] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RowEchelon row_echelon(const SparseMatrix& m) {
  RowEchelon e(m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    if (!m.row(r).empty()) e.insert(m.row(r));
  }
  return e;
}

int rank(const SparseMatrix& m) { return row_echelon(m).rank(); }

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m) { return row_echelon(m).kernel_basis(); }

namespace {

// Rows indexed by a shared numbering of the trees that occur.
std::vector<SparseRow> to_rows(const std::vector<TreeVector>& family, std::map<PlanarTree, int>& index) {
  std::vector<SparseRow> rows;
  for (const auto& v : family) {
    SparseRow row;
    for (const auto& [t, c] : v) {
      auto [it, inserted] = index.try_emplace(t, static_cast<int>(index.size()));
      row[it->second] = c;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int rank(const std::vector<TreeVector>& family) {
  std::map<PlanarTree, int> index;
  auto rows = to_rows(family, index);
  RowEchelon e(static_cast<int>(index.size()));
  for (auto& r : rows) e.insert(std::move(r));
  return e.rank();
}

bool in_span(const std::vector<TreeVector>& family, const TreeVector& v) {
  std::vector<TreeVector> extended = family;
  extended.push_back(v);
  return rank(extended) == rank(family);
}

}  // namespace tridend
