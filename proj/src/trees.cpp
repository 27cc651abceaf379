// SPDX-License-Identifier: Apache-2.0
#include "cleave/trees.hpp"

#include <functional>

namespace cleave {

BinaryTree::BinaryTree(NodePtr root) : root_(std::move(root)) {
  int leaves = 0;
  std::function<void(const NodePtr&)> count = [&](const NodePtr& n) {
    if (n->is_leaf()) {
      ++leaves;
    } else {
      count(n->left);
      count(n->right);
    }
  };
  count(root_);
  arity_ = leaves;
  validate();
}

void BinaryTree::validate() const {
  std::vector<char> seen(static_cast<size_t>(arity_), 0);
  std::function<void(const NodePtr&)> walk = [&](const NodePtr& n) {
    if (n->is_leaf()) {
      if (n->label < 1 || n->label > arity_ || seen[static_cast<size_t>(n->label - 1)])
        throw BadLabelsError("leaf labels are not a bijection onto {1..k}");
      seen[static_cast<size_t>(n->label - 1)] = 1;
    } else {
      walk(n->left);
      walk(n->right);
    }
  };
  walk(root_);
}

BinaryTree BinaryTree::left_blown(int k) {
  if (k < 1) throw BadIndexError("left_blown: arity must be >= 1");
  if (k == 1) return unit();
  // Built bottom-up: deepest vertex has leaves (k, k-1); each level up
  // adds a right leaf with one fewer internal vertex below it.
  NodePtr cur = node(leaf(k), leaf(k - 1));
  for (int lbl = k - 2; lbl >= 1; --lbl) cur = node(cur, leaf(lbl));
  return BinaryTree(cur);
}

BinaryTree BinaryTree::graft(int i, const BinaryTree& s) const {
  if (i < 1 || i > arity_) throw BadIndexError("graft: leaf index out of range");
  int m = s.arity();
  std::function<NodePtr(const NodePtr&)> shift_graft = [&](const NodePtr& n) -> NodePtr {
    if (n->is_leaf()) return leaf(n->label + i - 1);
    return node(shift_graft(n->left), shift_graft(n->right));
  };
  NodePtr grafted = shift_graft(s.root());
  std::function<NodePtr(const NodePtr&)> replace = [&](const NodePtr& n) -> NodePtr {
    if (n->is_leaf())
      return n->label == i ? grafted : leaf(n->label < i ? n->label : n->label + m - 1);
    return node(replace(n->left), replace(n->right));
  };
  return BinaryTree(replace(root_));
}

BinaryTree BinaryTree::act_sigma(const Permutation& sigma) const {
  if (sigma.size() != arity_) throw BadLabelsError("act_sigma: permutation size mismatch");
  std::function<NodePtr(const NodePtr&)> walk = [&](const NodePtr& n) -> NodePtr {
    if (n->is_leaf()) return leaf(sigma(n->label));
    return node(walk(n->left), walk(n->right));
  };
  return BinaryTree(walk(root_));
}

std::vector<int> BinaryTree::leaf_labels_in_order() const {
  std::vector<int> out;
  std::function<void(const NodePtr&)> walk = [&](const NodePtr& n) {
    if (n->is_leaf()) {
      out.push_back(n->label);
    } else {
      walk(n->left);
      walk(n->right);
    }
  };
  walk(root_);
  return out;
}

bool BinaryTree::structural_equal(const NodePtr& a, const NodePtr& b) {
  if (a->is_leaf() != b->is_leaf()) return false;
  if (a->is_leaf()) return a->label == b->label;
  return structural_equal(a->left, b->left) && structural_equal(a->right, b->right);
}

}  // namespace cleave
