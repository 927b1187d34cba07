#include "repkit/trigger.hpp"

#include "repkit/error.hpp"
#include "repkit/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace repkit {

bool trigger_member(const Clause &c_prime, const Clause &c, unsigned k) {
  return c_prime.clash_count(c) == 0 &&
         clause_difference(c_prime, c).size() <= k;
}

std::size_t TriggerHypergraph::index_of(const Clause &c) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), c);
  if (it == vertices.end() || *it != c)
    throw Error(Errc::invalid_input, "clause " + to_string(c) + " is no vertex");
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<Clause> TriggerHypergraph::edge_clauses(const Clause &c) const {
  std::vector<Clause> out;
  for (std::size_t i : edges[index_of(c)])
    out.push_back(vertices[i]);
  return out;
}

TriggerHypergraph trigger_hypergraph(const ClauseSet &p, unsigned k) {
  TriggerHypergraph h;
  h.k = k;
  h.vertices = p.clauses();
  h.edges.resize(h.vertices.size());
  for (std::size_t i = 0; i < h.vertices.size(); ++i)
    for (std::size_t j = 0; j < h.vertices.size(); ++j)
      if (trigger_member(h.vertices[j], h.vertices[i], k))
        h.edges[i].push_back(j);
  return h;
}

TriggerHypergraph trigger_hypergraph_of(const ClauseSet &f, unsigned k,
                                        const Limits &limits) {
  return trigger_hypergraph(prime_implicates(f, limits), k);
}

bool is_transversal(const TriggerHypergraph &h,
                    std::span<const std::size_t> vertices) {
  std::vector<char> in(h.vertices.size(), 0);
  for (std::size_t v : vertices)
    if (v < in.size())
      in[v] = 1;
  return std::all_of(h.edges.begin(), h.edges.end(), [&](const auto &e) {
    return std::any_of(e.begin(), e.end(), [&](std::size_t v) { return in[v]; });
  });
}

bool is_transversal(const TriggerHypergraph &h, const ClauseSet &f) {
  std::vector<std::size_t> ids;
  for (const Clause &c : f) {
    auto it = std::lower_bound(h.vertices.begin(), h.vertices.end(), c);
    if (it != h.vertices.end() && *it == c)
      ids.push_back(static_cast<std::size_t>(it - h.vertices.begin()));
  }
  return is_transversal(h, ids);
}

namespace {

class Bits {
public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1U; }
  Bits &operator|=(const Bits &o) {
    for (std::size_t i = 0; i < w_.size(); ++i)
      w_[i] |= o.w_[i];
    return *this;
  }
  bool intersects(const Bits &o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i])
        return true;
    return false;
  }
  std::size_t count_minus(const Bits &o) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(w_[i] & ~o.w_[i]));
    return n;
  }
  std::size_t count_and(const Bits &o) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
    return n;
  }
  bool intersects_minus(const Bits &o, const Bits &minus) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i] & ~minus.w_[i])
        return true;
    return false;
  }
  void or_minus(const Bits &o, const Bits &minus) {
    for (std::size_t i = 0; i < w_.size(); ++i)
      w_[i] |= o.w_[i] & ~minus.w_[i];
  }

private:
  std::vector<std::uint64_t> w_;
};

class TransversalSearch {
public:
  TransversalSearch(const TriggerHypergraph &h, std::uint64_t budget)
      : n_(h.vertices.size()), m_(h.edges.size()), budget_(budget) {
    for (const auto &e : h.edges) {
      Bits b(n_);
      for (std::size_t v : e)
        b.set(v);
      edges_.push_back(b);
    }
    hits_.assign(n_, Bits(m_));
    for (std::size_t e = 0; e < m_; ++e)
      for (std::size_t v : h.edges[e])
        hits_[v].set(e);
  }

  std::vector<std::size_t> greedy() const {
    Bits covered(m_);
    std::vector<std::size_t> out;
    for (;;) {
      std::size_t best = n_, gain = 0;
      for (std::size_t v = 0; v < n_; ++v) {
        std::size_t g = hits_[v].count_minus(covered);
        if (g > gain) {
          gain = g;
          best = v;
        }
      }
      if (gain == 0)
        break;
      out.push_back(best);
      covered |= hits_[best];
    }
    return out;
  }

  // Disjoint uncovered edges, restricted to allowed vertices.
  std::size_t packing(const Bits &covered, const Bits &forbidden) const {
    std::vector<std::pair<std::size_t, std::size_t>> open;
    for (std::size_t e = 0; e < m_; ++e)
      if (!covered.test(e))
        open.emplace_back(edges_[e].count_minus(forbidden), e);
    std::sort(open.begin(), open.end());
    Bits used(n_);
    std::size_t count = 0;
    for (auto [size, e] : open) {
      (void)size;
      if (!edges_[e].intersects_minus(used, forbidden)) {
        used.or_minus(edges_[e], forbidden);
        ++count;
      }
    }
    return count;
  }

  TransversalResult run() {
    best_ = greedy();
    TransversalResult r;
    Bits covered(m_), forbidden(n_);
    r.lower_bound = packing(covered, forbidden);
    std::vector<std::size_t> chosen;
    go(covered, forbidden, chosen);
    r.value = best_.size();
    r.witness = best_;
    std::sort(r.witness.begin(), r.witness.end());
    r.exact = !exhausted_;
    if (r.exact)
      r.lower_bound = r.value;
    return r;
  }

private:
  void go(const Bits &covered, Bits forbidden, std::vector<std::size_t> &chosen) {
    if (exhausted_)
      return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    std::size_t pick = m_, pick_size = n_ + 1;
    for (std::size_t e = 0; e < m_; ++e) {
      if (covered.test(e))
        continue;
      std::size_t s = edges_[e].count_minus(forbidden);
      if (s < pick_size) {
        pick_size = s;
        pick = e;
      }
    }
    if (pick == m_) {
      if (chosen.size() < best_.size())
        best_ = chosen;
      return;
    }
    if (pick_size == 0)
      return;
    if (chosen.size() + packing(covered, forbidden) >= best_.size())
      return;
    for (std::size_t v = 0; v < n_; ++v) {
      if (!edges_[pick].test(v) || forbidden.test(v))
        continue;
      Bits next = covered;
      next |= hits_[v];
      chosen.push_back(v);
      go(next, forbidden, chosen);
      chosen.pop_back();
      forbidden.set(v);
      if (exhausted_)
        return;
    }
  }

  std::size_t n_, m_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Bits> edges_;
  std::vector<Bits> hits_;
  std::vector<std::size_t> best_;
};

// Maximum clique in the "disjoint edges" graph, with a greedy colouring
// bound.
class MatchingSearch {
public:
  MatchingSearch(const TriggerHypergraph &h, std::uint64_t budget)
      : m_(h.edges.size()), budget_(budget), adj_(m_, Bits(m_)) {
    std::vector<Bits> as_bits;
    for (const auto &e : h.edges) {
      Bits b(h.vertices.size());
      for (std::size_t v : e)
        b.set(v);
      as_bits.push_back(b);
    }
    for (std::size_t a = 0; a < m_; ++a)
      for (std::size_t b = a + 1; b < m_; ++b)
        if (!as_bits[a].intersects(as_bits[b])) {
          adj_[a].set(b);
          adj_[b].set(a);
        }
  }

  MatchingResult run() {
    std::vector<std::size_t> order(m_);
    for (std::size_t i = 0; i < m_; ++i)
      order[i] = i;
    Bits all(m_);
    for (std::size_t i = 0; i < m_; ++i)
      all.set(i);
    std::vector<std::size_t> degree(m_);
    for (std::size_t i = 0; i < m_; ++i)
      degree[i] = adj_[i].count_and(all);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return degree[a] > degree[b];
    });
    std::vector<std::size_t> current;
    expand(order, current);
    MatchingResult r;
    r.value = best_.size();
    r.witness = best_;
    std::sort(r.witness.begin(), r.witness.end());
    r.exact = !exhausted_;
    return r;
  }

private:
  void expand(const std::vector<std::size_t> &cand,
              std::vector<std::size_t> &current) {
    if (exhausted_)
      return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (current.size() > best_.size())
      best_ = current;
    // Greedy colouring: colour[i] bounds the clique within order[0..i].
    std::vector<std::size_t> order, colour;
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t v : cand) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = std::any_of(classes[c].begin(), classes[c].end(),
                                 [&](std::size_t u) { return adj_[v].test(u); });
        if (!clash)
          break;
      }
      if (c == classes.size())
        classes.emplace_back();
      classes[c].push_back(v);
    }
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (std::size_t v : classes[c]) {
        order.push_back(v);
        colour.push_back(c + 1);
      }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best_.size())
        return;
      std::size_t v = order[i];
      std::vector<std::size_t> next;
      for (std::size_t j = 0; j < i; ++j)
        if (adj_[v].test(order[j]))
          next.push_back(order[j]);
      current.push_back(v);
      if (next.empty()) {
        if (current.size() > best_.size())
          best_ = current;
      } else {
        expand(next, current);
      }
      current.pop_back();
      if (exhausted_)
        return;
    }
  }

  std::size_t m_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Bits> adj_;
  std::vector<std::size_t> best_;
};

void check_size(const TriggerHypergraph &h, const Limits &limits) {
  if (h.vertices.size() > limits.hypergraph_vertices)
    throw Error(Errc::size_limit_exceeded,
                "hypergraph with " + std::to_string(h.vertices.size()) +
                    " vertices");
  for (const auto &e : h.edges)
    if (e.empty())
      throw Error(Errc::invalid_input, "empty hyperedge has no transversal");
}

} // namespace

TransversalResult transversal_number(const TriggerHypergraph &h,
                                     const Limits &limits) {
  check_size(h, limits);
  return TransversalSearch(h, limits.search_nodes).run();
}

MatchingResult matching_number(const TriggerHypergraph &h, const Limits &limits) {
  check_size(h, limits);
  return MatchingSearch(h, limits.search_nodes).run();
}

bool depth_k_incomparable(const LabeledBinaryTree &t, unsigned k,
                          std::span<const std::size_t> a,
                          std::span<const std::size_t> b) {
  std::vector<unsigned> depth = t.depths();
  std::vector<char> in_a(t.num_leaves() + 1, 0), in_b(t.num_leaves() + 1, 0);
  for (std::size_t i : a)
    in_a.at(i) = 1;
  for (std::size_t i : b)
    in_b.at(i) = 1;
  for (std::size_t w = 0; w < t.size(); ++w) {
    if (depth[w] != k)
      continue;
    auto [lo, hi] = t.leaf_range(w);
    bool a_only = false, b_only = false;
    for (std::size_t i = lo; i <= hi; ++i) {
      a_only = a_only || (in_a[i] && !in_b[i]);
      b_only = b_only || (in_b[i] && !in_a[i]);
    }
    if (!a_only || !b_only)
      return false;
  }
  return true;
}

DisjointEdgeCertificate depth_k_incomparable_family(const LabeledBinaryTree &t,
                                                    unsigned k,
                                                    std::size_t max_edge_leaves) {
  std::vector<unsigned> depth = t.depths();
  for (std::size_t w : t.leaves())
    if (depth[w] <= k)
      throw Error(Errc::depth_precondition_violated,
                  "a leaf has depth " + std::to_string(depth[w]) +
                      ", need at least " + std::to_string(k + 1));
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t w = 0; w < t.size(); ++w)
    if (depth[w] == k)
      ranges.push_back(t.leaf_range(w));
  std::size_t m = t.num_leaves();
  for (auto [lo, hi] : ranges)
    m = std::min(m, hi - lo + 1);
  std::size_t half = m / 2;

  DisjointEdgeCertificate cert;
  cert.k = k;
  // All half-subsets of positions 0..m-1 in lexicographic order; position p
  // is the p-th leaf of every depth-k subtree.
  std::vector<std::size_t> pos(half);
  for (std::size_t i = 0; i < half; ++i)
    pos[i] = i;
  for (;;) {
    std::vector<std::size_t> v;
    for (auto [lo, hi] : ranges) {
      (void)hi;
      for (std::size_t p : pos)
        v.push_back(lo + p);
    }
    std::sort(v.begin(), v.end());
    cert.clauses.push_back(clause_cv(t, v));
    cert.leaf_sets.push_back(std::move(v));
    std::size_t i = half;
    while (i > 0 && pos[i - 1] == m - half + i - 1)
      --i;
    if (i == 0)
      break;
    ++pos[i - 1];
    for (std::size_t j = i; j < half; ++j)
      pos[j] = pos[j - 1] + 1;
  }

  std::size_t leaves = t.num_leaves();
  if (leaves > max_edge_leaves || leaves > 30)
    return cert;
  // Every prime implicate is some C_V; collect the edges of the family.
  cert.edges.resize(cert.clauses.size());
  std::vector<std::size_t> v;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << leaves); ++mask) {
    v.clear();
    for (std::size_t i = 0; i < leaves; ++i)
      if ((mask >> i) & 1U)
        v.push_back(i + 1);
    Clause c = clause_cv(t, v);
    for (std::size_t j = 0; j < cert.clauses.size(); ++j)
      if (trigger_member(c, cert.clauses[j], k))
        cert.edges[j].push_back(c);
  }
  for (auto &e : cert.edges)
    std::sort(e.begin(), e.end());
  cert.edges_checked = true;
  cert.edges_disjoint = true;
  for (std::size_t a = 0; a < cert.edges.size() && cert.edges_disjoint; ++a)
    for (std::size_t b = a + 1; b < cert.edges.size(); ++b) {
      std::vector<Clause> common;
      std::set_intersection(cert.edges[a].begin(), cert.edges[a].end(),
                            cert.edges[b].begin(), cert.edges[b].end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        cert.edges_disjoint = false;
        break;
      }
    }
  return cert;
}

} // namespace repkit
