#include "repkit/smu_tree.hpp"

#include "repkit/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>

namespace repkit {

namespace {

using Node = LabeledBinaryTree::Node;

void copy_into(const std::vector<Node> &src, std::size_t w,
               std::vector<Node> &dst) {
  std::size_t at = dst.size();
  dst.push_back({-1, -1, src[w].label});
  if (src[w].left < 0)
    return;
  dst[at].left = static_cast<std::int32_t>(dst.size());
  copy_into(src, static_cast<std::size_t>(src[w].left), dst);
  dst[at].right = static_cast<std::int32_t>(dst.size());
  copy_into(src, static_cast<std::size_t>(src[w].right), dst);
}

} // namespace

LabeledBinaryTree LabeledBinaryTree::join(Var label, const LabeledBinaryTree &l,
                                          const LabeledBinaryTree &r) {
  std::vector<Node> nodes;
  nodes.reserve(1 + l.size() + r.size());
  nodes.push_back({1, static_cast<std::int32_t>(1 + l.size()), label});
  copy_into(l.nodes_, 0, nodes);
  copy_into(r.nodes_, 0, nodes);
  return from_nodes(std::move(nodes));
}

LabeledBinaryTree LabeledBinaryTree::from_nodes(std::vector<Node> nodes) {
  if (nodes.empty())
    throw Error(Errc::invalid_input, "tree without nodes");
  // Preorder check: walking from the root must visit ids 0, 1, 2, ...
  std::vector<std::size_t> stack{0};
  std::size_t expect = 0;
  std::vector<Var> labels;
  while (!stack.empty()) {
    std::size_t w = stack.back();
    stack.pop_back();
    if (w != expect++)
      throw Error(Errc::invalid_input, "tree nodes not in preorder");
    const Node &n = nodes[w];
    if ((n.left < 0) != (n.right < 0))
      throw Error(Errc::invalid_input, "inner node with one child");
    if (n.left < 0) {
      if (n.label != 0)
        throw Error(Errc::invalid_input, "labelled leaf");
      continue;
    }
    if (n.label == 0)
      throw Error(Errc::invalid_input, "unlabelled inner node");
    if (static_cast<std::size_t>(n.left) >= nodes.size() ||
        static_cast<std::size_t>(n.right) >= nodes.size())
      throw Error(Errc::invalid_input, "child index out of range");
    labels.push_back(n.label);
    stack.push_back(static_cast<std::size_t>(n.right));
    stack.push_back(static_cast<std::size_t>(n.left));
  }
  if (expect != nodes.size())
    throw Error(Errc::invalid_input, "unreachable tree nodes");
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw Error(Errc::invalid_input, "labels are not injective");
  LabeledBinaryTree t;
  t.nodes_ = std::move(nodes);
  return t;
}

LabeledBinaryTree LabeledBinaryTree::subtree(std::size_t w) const {
  std::vector<Node> nodes;
  copy_into(nodes_, w, nodes);
  LabeledBinaryTree t;
  t.nodes_ = std::move(nodes);
  return t;
}

std::vector<std::size_t> LabeledBinaryTree::leaves() const {
  // Preorder lists leaves left to right.
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < nodes_.size(); ++w)
    if (nodes_[w].left < 0)
      out.push_back(w);
  return out;
}

std::vector<Var> LabeledBinaryTree::labels() const {
  std::vector<Var> out;
  for (const Node &n : nodes_)
    if (n.left >= 0)
      out.push_back(n.label);
  std::sort(out.begin(), out.end());
  return out;
}

Var LabeledBinaryTree::max_label() const {
  Var m = 0;
  for (const Node &n : nodes_)
    m = std::max(m, n.label);
  return m;
}

std::optional<std::size_t> LabeledBinaryTree::node_of(Var v) const {
  for (std::size_t w = 0; w < nodes_.size(); ++w)
    if (nodes_[w].left >= 0 && nodes_[w].label == v)
      return w;
  return std::nullopt;
}

std::vector<unsigned> LabeledBinaryTree::depths() const {
  std::vector<unsigned> d(nodes_.size(), 0);
  for (std::size_t w = 0; w < nodes_.size(); ++w)
    if (nodes_[w].left >= 0) {
      d[static_cast<std::size_t>(nodes_[w].left)] = d[w] + 1;
      d[static_cast<std::size_t>(nodes_[w].right)] = d[w] + 1;
    }
  return d;
}

std::pair<std::size_t, std::size_t>
LabeledBinaryTree::leaf_range(std::size_t w) const {
  // In preorder the subtree of w is a contiguous block of node ids.
  std::size_t before = 0;
  for (std::size_t i = 0; i < w; ++i)
    before += nodes_[i].left < 0 ? 1 : 0;
  std::size_t end = w, open = 1;
  std::size_t inside = 0;
  while (open) {
    if (nodes_[end].left < 0) {
      ++inside;
      --open;
    } else {
      ++open;
    }
    ++end;
  }
  return {before + 1, before + inside};
}

namespace {

unsigned hts_at(const std::vector<Node> &n, std::size_t w) {
  if (n[w].left < 0)
    return 0;
  unsigned a = hts_at(n, static_cast<std::size_t>(n[w].left));
  unsigned b = hts_at(n, static_cast<std::size_t>(n[w].right));
  return a == b ? a + 1 : std::max(a, b);
}

unsigned height_at(const std::vector<Node> &n, std::size_t w) {
  if (n[w].left < 0)
    return 0;
  return 1 + std::max(height_at(n, static_cast<std::size_t>(n[w].left)),
                      height_at(n, static_cast<std::size_t>(n[w].right)));
}

void paths(const std::vector<Node> &n, std::size_t w, std::vector<Lit> &path,
           std::vector<Clause> &out) {
  if (n[w].left < 0) {
    std::vector<Lit> lits = path;
    out.push_back(Clause(std::move(lits)));
    return;
  }
  path.push_back(Lit::pos(n[w].label));
  paths(n, static_cast<std::size_t>(n[w].left), path, out);
  path.back() = Lit::neg(n[w].label);
  paths(n, static_cast<std::size_t>(n[w].right), path, out);
  path.pop_back();
}

void build_from_clauses(const ClauseSet &f, std::vector<Node> &out) {
  std::size_t at = out.size();
  out.push_back({});
  if (f.c() == 1 && f.has_empty_clause())
    return;
  if (f.empty() || f.has_empty_clause())
    throw Error(Errc::not_in_smu1, "clause-set " + to_string(f) +
                                       " is not a tree clause-set");
  std::vector<Var> common = f[0].vars();
  for (const Clause &c : f) {
    std::vector<Var> vs = c.vars(), keep;
    std::set_intersection(common.begin(), common.end(), vs.begin(), vs.end(),
                          std::back_inserter(keep));
    common = std::move(keep);
  }
  if (common.empty())
    throw Error(Errc::not_in_smu1,
                "no variable occurs in every clause of " + to_string(f));
  Var v = common.front();
  std::vector<Clause> zero, one;
  for (const Clause &c : f) {
    std::vector<Lit> rest;
    bool positive = c.contains(Lit::pos(v));
    for (Lit x : c)
      if (x.var() != v)
        rest.push_back(x);
    (positive ? zero : one).push_back(Clause::from_sorted(std::move(rest)));
  }
  if (zero.empty() || one.empty())
    throw Error(Errc::not_in_smu1,
                "variable " + std::to_string(v) + " occurs in one polarity only");
  out[at].label = v;
  out[at].left = static_cast<std::int32_t>(out.size());
  build_from_clauses(ClauseSet(std::move(zero)), out);
  out[at].right = static_cast<std::int32_t>(out.size());
  build_from_clauses(ClauseSet(std::move(one)), out);
}

void extremal_into(unsigned k, unsigned h, std::vector<Node> &out, Var &next) {
  std::size_t at = out.size();
  out.push_back({});
  if (k == 0)
    return;
  out[at].label = next++;
  out[at].left = static_cast<std::int32_t>(out.size());
  extremal_into(std::min(k, h - 1), h - 1, out, next);
  out[at].right = static_cast<std::int32_t>(out.size());
  if (k == 1)
    out.push_back({});
  else
    extremal_into(k - 1, h - 1, out, next);
}

void check_pair(unsigned k, unsigned h) {
  if (h < k || (k == 0 && h != 0))
    throw Error(Errc::invalid_parameters,
                "no extremal tree for k=" + std::to_string(k) +
                    " h=" + std::to_string(h));
}

} // namespace

unsigned hts(const LabeledBinaryTree &t) { return hts_at(t.nodes(), 0); }

unsigned height(const LabeledBinaryTree &t) { return height_at(t.nodes(), 0); }

std::vector<Clause> leaf_clauses(const LabeledBinaryTree &t) {
  std::vector<Clause> out;
  std::vector<Lit> path;
  paths(t.nodes(), 0, path, out);
  return out;
}

ClauseSet smuo(const LabeledBinaryTree &t) { return ClauseSet(leaf_clauses(t)); }

LabeledBinaryTree tsmuo(const ClauseSet &f) {
  std::vector<Node> nodes;
  build_from_clauses(f, nodes);
  try {
    return LabeledBinaryTree::from_nodes(std::move(nodes));
  } catch (const Error &e) {
    throw Error(Errc::not_in_smu1, e.what());
  }
}

LabeledBinaryTree apply_literal_tree(const LabeledBinaryTree &t, Lit x) {
  auto w = t.node_of(x.var());
  if (!w)
    throw Error(Errc::variable_not_present,
                "variable " + std::to_string(x.var()) + " labels no node");
  const auto &src = t.nodes();
  // Setting x to 1 drops the subtree behind the x-edge and lifts the other.
  std::size_t keep = static_cast<std::size_t>(x.positive() ? src[*w].right
                                                           : src[*w].left);
  std::vector<Node> out;
  auto rebuild = [&](auto &&self, std::size_t u) -> void {
    if (u == *w) {
      copy_into(src, keep, out);
      return;
    }
    std::size_t at = out.size();
    out.push_back({-1, -1, src[u].label});
    if (src[u].left < 0)
      return;
    out[at].left = static_cast<std::int32_t>(out.size());
    self(self, static_cast<std::size_t>(src[u].left));
    out[at].right = static_cast<std::int32_t>(out.size());
    self(self, static_cast<std::size_t>(src[u].right));
  };
  rebuild(rebuild, 0);
  return LabeledBinaryTree::from_nodes(std::move(out));
}

LabeledBinaryTree extremal_tree(unsigned k, unsigned h) {
  check_pair(k, h);
  std::vector<Node> nodes;
  nodes.reserve(2 * alpha(k, h) - 1);
  Var next = 1;
  extremal_into(k, h, nodes, next);
  return LabeledBinaryTree::from_nodes(std::move(nodes));
}

std::uint64_t alpha(unsigned k, unsigned h) {
  check_pair(k, h);
  boost::multiprecision::cpp_int sum = 0, binom = 1;
  for (unsigned i = 0; i <= k; ++i) {
    if (i > 0)
      binom = binom * (h - i + 1) / i;
    sum += binom;
    if (sum > UINT64_MAX)
      throw Error(Errc::invalid_parameters, "alpha overflows 64 bits");
  }
  return sum.convert_to<std::uint64_t>();
}

std::uint64_t extremal_literal_count(unsigned k, unsigned h) {
  check_pair(k, h);
  // depth sum D(k, h) over leaves; every leaf contributes depth + 1.
  struct Rec {
    std::uint64_t depth_sum(unsigned k, unsigned h) {
      if (k == 0)
        return 0;
      unsigned lk = std::min(k, h - 1);
      std::uint64_t left = depth_sum(lk, h - 1) + alpha(lk, h - 1);
      std::uint64_t right = k == 1 ? 1 : depth_sum(k - 1, h - 1) + alpha(k - 1, h - 1);
      return left + right;
    }
  } rec;
  return rec.depth_sum(k, h) + alpha(k, h);
}

DopedClauseSet dope_tree(const LabeledBinaryTree &t) {
  std::vector<Clause> cs = leaf_clauses(t);
  return dope_ordered(cs, t.max_label() + 1);
}

Clause clause_cv(const LabeledBinaryTree &t, std::span<const std::size_t> v) {
  if (v.empty())
    throw Error(Errc::empty_leaf_set, "C_V needs a non-empty leaf set");
  std::size_t leaves = t.num_leaves();
  std::vector<std::size_t> prefix(leaves + 1, 0);
  std::vector<char> in(leaves + 1, 0);
  for (std::size_t i : v) {
    if (i < 1 || i > leaves)
      throw Error(Errc::invalid_input, "leaf number out of range");
    in[i] = 1;
  }
  for (std::size_t i = 1; i <= leaves; ++i)
    prefix[i] = prefix[i - 1] + static_cast<std::size_t>(in[i]);
  const auto &nodes = t.nodes();
  // Leaf ranges for all nodes in one pass from the bottom.
  std::vector<std::pair<std::size_t, std::size_t>> range(nodes.size());
  std::size_t counter = 0;
  for (std::size_t w = 0; w < nodes.size(); ++w)
    if (nodes[w].left < 0) {
      ++counter;
      range[w] = {counter, counter};
    }
  for (std::size_t w = nodes.size(); w-- > 0;)
    if (nodes[w].left >= 0)
      range[w] = {range[static_cast<std::size_t>(nodes[w].left)].first,
                  range[static_cast<std::size_t>(nodes[w].right)].second};
  auto hits = [&](std::size_t w) {
    return prefix[range[w].second] - prefix[range[w].first - 1] != 0;
  };
  std::vector<Lit> lits;
  Var base = t.max_label();
  for (std::size_t w = 0; w < nodes.size(); ++w) {
    if (nodes[w].left < 0)
      continue;
    bool l = hits(static_cast<std::size_t>(nodes[w].left));
    bool r = hits(static_cast<std::size_t>(nodes[w].right));
    if (l && !r)
      lits.push_back(Lit::pos(nodes[w].label));
    else if (r && !l)
      lits.push_back(Lit::neg(nodes[w].label));
  }
  for (std::size_t i = 1; i <= leaves; ++i)
    if (in[i])
      lits.push_back(Lit::pos(base + static_cast<Var>(i)));
  return Clause(std::move(lits));
}

ClauseSet tree_prime_implicates(const LabeledBinaryTree &t) {
  std::size_t leaves = t.num_leaves();
  if (leaves > 24)
    throw Error(Errc::size_limit_exceeded, "too many leaf subsets");
  std::vector<Clause> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << leaves); ++m) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < leaves; ++i)
      if ((m >> i) & 1U)
        v.push_back(i + 1);
    out.push_back(clause_cv(t, v));
  }
  return ClauseSet(std::move(out));
}

std::string to_dot(const LabeledBinaryTree &t) {
  std::ostringstream out;
  out << "digraph tree {\n  node [shape=circle];\n";
  std::size_t leaf = 0;
  const auto &nodes = t.nodes();
  for (std::size_t w = 0; w < nodes.size(); ++w) {
    if (nodes[w].left < 0)
      out << "  n" << w << " [shape=box,label=\"" << ++leaf << "\"];\n";
    else
      out << "  n" << w << " [label=\"v" << nodes[w].label << "\"];\n";
  }
  for (std::size_t w = 0; w < nodes.size(); ++w) {
    if (nodes[w].left < 0)
      continue;
    out << "  n" << w << " -> n" << nodes[w].left << " [label=\"v"
        << nodes[w].label << "\"];\n";
    out << "  n" << w << " -> n" << nodes[w].right << " [label=\"-v"
        << nodes[w].label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace repkit
