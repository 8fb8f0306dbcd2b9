#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tridend/errors.hpp"

namespace tridend {

/// A reduced planar rooted tree: either the single leaf `|` or an internal
/// node with at least two ordered children.
///
/// Trees are immutable and share structure. The canonical text form is
/// `|` for the leaf and `(c1,...,ck)` for a node; it doubles as the identity
/// of the tree for hashing and ordering.
class PlanarTree {
 public:
  /// The single leaf `|`, which is also the unit of the algebra.
  PlanarTree();

  static PlanarTree leaf() { return PlanarTree(); }

  /// Grafts the trees on a common root, left to right. Throws
  /// std::invalid_argument for fewer than two children.
  static PlanarTree graft(std::vector<PlanarTree> children);

  /// Parses the canonical grammar; whitespace is ignored.
  static PlanarTree parse(std::string_view text);

  bool is_leaf() const { return children().empty(); }
  std::span<const PlanarTree> children() const;
  int leaves() const;
  int degree() const { return leaves() - 1; }
  const std::string& str() const;
  std::size_t hash() const;

  friend bool operator==(const PlanarTree& a, const PlanarTree& b);
  /// Canonical order: by degree, then by canonical string (byte order).
  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b);

 private:
  struct Node;
  explicit PlanarTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using Forest = std::vector<PlanarTree>;

/// The generator Y = (|,|).
PlanarTree generator();

/// Corolla with n+1 leaves (n >= 1).
PlanarTree corolla(int n);

int leaf_count(const Forest& forest);

/// All reduced trees with n+1 leaves in canonical order.
std::vector<PlanarTree> enumerate_trees(int n);

/// Trees of every degree in [lo, hi], concatenated in canonical order.
std::vector<PlanarTree> enumerate_trees(int lo, int hi);

/// Forests hanging off the right-most branch, root first. Each forest holds
/// every child of the branch node except the last one.
std::vector<Forest> right_comb_decomposition(const PlanarTree& t);
std::vector<Forest> left_comb_decomposition(const PlanarTree& t);

/// Inverse of right_comb_decomposition; an empty list gives the leaf.
PlanarTree assemble_right_comb(std::span<const Forest> forests);
PlanarTree assemble_left_comb(std::span<const Forest> forests);

bool is_binary(const PlanarTree& t);

}  // namespace tridend

template <>
struct std::hash<tridend::PlanarTree> {
  std::size_t operator()(const tridend::PlanarTree& t) const noexcept { return t.hash(); }
};
