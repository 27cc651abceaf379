// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <vector>

#include "cleave/errors.hpp"
#include "cleave/perm.hpp"

namespace cleave {

/// Binary rooted planar labelled tree.  Nodes are immutable and shared,
/// so copies are cheap and every transform builds a fresh spine.
///
/// Internal vertices are numbered in canonical order: depth-first from
/// the root-adjacent vertex, left child before right child.  This fixes
/// the matching between vertex i and decoration i everywhere downstream.
class BinaryTree {
 public:
  struct Node {
    int label = 0;  // leaf label, meaningful iff leaf
    std::shared_ptr<const Node> left, right;
    bool is_leaf() const { return !left; }
  };
  using NodePtr = std::shared_ptr<const Node>;

  BinaryTree() : BinaryTree(leaf(1)) {}
  explicit BinaryTree(NodePtr root);

  static NodePtr leaf(int label) {
    auto n = std::make_shared<Node>();
    n->label = label;
    return n;
  }
  static NodePtr node(NodePtr l, NodePtr r) {
    auto n = std::make_shared<Node>();
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
  }

  /// The 1-ary tree L_1: a single leaf, no internal vertices.
  static BinaryTree unit() { return BinaryTree(leaf(1)); }

  /// The arity-k left-blown tree: right-going edges end at leaves, the
  /// sole leaf on a left-going edge is labelled k, and a leaf with i
  /// internal vertices below it is labelled i.
  static BinaryTree left_blown(int k);

  int arity() const { return arity_; }
  const NodePtr& root() const { return root_; }

  /// Grafts S onto the leaf labelled i.  The labels of S move to
  /// positions i..i+m-1; labels of this tree above i shift up by m-1.
  BinaryTree graft(int i, const BinaryTree& s) const;

  /// Relabels leaf j to sigma(j); the shape is unchanged.
  BinaryTree act_sigma(const Permutation& sigma) const;

  /// Leaf labels in planar left-to-right order.
  std::vector<int> leaf_labels_in_order() const;

  /// Number of internal vertices (= arity - 1).
  int internal_count() const { return arity_ - 1; }

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
    return structural_equal(a.root_, b.root_);
  }
  friend bool operator!=(const BinaryTree& a, const BinaryTree& b) { return !(a == b); }

  static bool structural_equal(const NodePtr& a, const NodePtr& b);

 private:
  void validate() const;

  NodePtr root_;
  int arity_ = 1;
};

}  // namespace cleave
