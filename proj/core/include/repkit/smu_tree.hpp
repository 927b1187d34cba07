#pragma once

#include "repkit/cnf.hpp"
#include "repkit/mps.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace repkit {

// Full binary tree with injective variable labels on the inner nodes.
// Nodes are stored in preorder (root = 0), so two trees are equal iff their
// node arrays are. Leaves are numbered 1.. from left to right.
class LabeledBinaryTree {
public:
  struct Node {
    std::int32_t left = -1;
    std::int32_t right = -1;
    Var label = 0;
    friend bool operator==(const Node &, const Node &) = default;
  };

  LabeledBinaryTree() : nodes_(1) {}
  static LabeledBinaryTree leaf() { return {}; }
  static LabeledBinaryTree join(Var label, const LabeledBinaryTree &left,
                                const LabeledBinaryTree &right);
  // Validates shape, preorder layout and label injectivity.
  static LabeledBinaryTree from_nodes(std::vector<Node> nodes);

  const std::vector<Node> &nodes() const { return nodes_; }
  const Node &node(std::size_t w) const { return nodes_[w]; }
  bool is_leaf(std::size_t w = 0) const { return nodes_[w].left < 0; }
  Var label(std::size_t w = 0) const { return nodes_[w].label; }
  LabeledBinaryTree subtree(std::size_t w) const;
  LabeledBinaryTree left() const { return subtree(static_cast<std::size_t>(nodes_[0].left)); }
  LabeledBinaryTree right() const { return subtree(static_cast<std::size_t>(nodes_[0].right)); }

  std::size_t size() const { return nodes_.size(); }
  std::size_t num_leaves() const { return (nodes_.size() + 1) / 2; }
  std::size_t num_inner() const { return nodes_.size() / 2; }
  // Node ids of the leaves, left to right.
  std::vector<std::size_t> leaves() const;
  // Sorted labels.
  std::vector<Var> labels() const;
  Var max_label() const;
  std::optional<std::size_t> node_of(Var v) const;
  std::vector<unsigned> depths() const;
  // Leaf numbers (1-based) below node w form the range [first, last].
  std::pair<std::size_t, std::size_t> leaf_range(std::size_t w) const;

  friend bool operator==(const LabeledBinaryTree &,
                         const LabeledBinaryTree &) = default;

private:
  std::vector<Node> nodes_;
};

unsigned hts(const LabeledBinaryTree &t);
unsigned height(const LabeledBinaryTree &t);

// One clause per leaf: the literals on the path from the root, the left
// edge carrying the positive literal.
ClauseSet smuo(const LabeledBinaryTree &t);
std::vector<Clause> leaf_clauses(const LabeledBinaryTree &t);
// Inverse of smuo; errors with not-in-SMU1.
LabeledBinaryTree tsmuo(const ClauseSet &f);

// The tree of <x -> 1> * smuo(T).
LabeledBinaryTree apply_literal_tree(const LabeledBinaryTree &t, Lit x);

// Member of ExT(k, h) with the heavier subtree on the left and labels
// 1, 2, ... in preorder.
LabeledBinaryTree extremal_tree(unsigned k, unsigned h);
// Sum of binomial(h, i) for i <= k.
std::uint64_t alpha(unsigned k, unsigned h);
// l(dope_tree(ExT(k, h))): each leaf contributes its depth plus one.
std::uint64_t extremal_literal_count(unsigned k, unsigned h);

// Doping with variables max_label+1, max_label+2, ... in leaf order.
DopedClauseSet dope_tree(const LabeledBinaryTree &t);
// C_V for a non-empty set of 1-based leaf numbers, over dope_tree(t).
Clause clause_cv(const LabeledBinaryTree &t, std::span<const std::size_t> v);
// All C_V, i.e. the prime implicates of dope_tree(t).
ClauseSet tree_prime_implicates(const LabeledBinaryTree &t);

std::string to_dot(const LabeledBinaryTree &t);

} // namespace repkit
