#include "resolution.hpp"

#include "repkit/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <unordered_set>
#include <vector>

namespace repkit::detail {

namespace {

template <std::size_t W> struct Mask {
  std::array<std::uint64_t, W> pos{};
  std::array<std::uint64_t, W> neg{};
  unsigned size = 0;

  bool operator==(const Mask &o) const { return pos == o.pos && neg == o.neg; }
};

template <std::size_t W> struct MaskHash {
  std::size_t operator()(const Mask<W> &m) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t w = 0; w < W; ++w) {
      h ^= m.pos[w] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= m.neg[w] + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

template <std::size_t W> bool subsumes(const Mask<W> &a, const Mask<W> &b) {
  if (a.size > b.size)
    return false;
  for (std::size_t w = 0; w < W; ++w)
    if ((a.pos[w] & ~b.pos[w]) | (a.neg[w] & ~b.neg[w]))
      return false;
  return true;
}

// Resolvent if a and b clash in exactly one variable.
template <std::size_t W>
bool resolve(const Mask<W> &a, const Mask<W> &b, Mask<W> &out) {
  unsigned clashes = 0;
  std::array<std::uint64_t, W> clash{};
  for (std::size_t w = 0; w < W; ++w) {
    clash[w] = (a.pos[w] & b.neg[w]) | (a.neg[w] & b.pos[w]);
    clashes += static_cast<unsigned>(std::popcount(clash[w]));
    if (clashes > 1)
      return false;
  }
  if (clashes != 1)
    return false;
  out.size = 0;
  for (std::size_t w = 0; w < W; ++w) {
    out.pos[w] = (a.pos[w] | b.pos[w]) & ~clash[w];
    out.neg[w] = (a.neg[w] | b.neg[w]) & ~clash[w];
    out.size += static_cast<unsigned>(std::popcount(out.pos[w]) +
                                      std::popcount(out.neg[w]));
  }
  return true;
}

template <std::size_t W>
Saturation run(const ClauseSet &f, const std::vector<Var> &vars, unsigned width,
               std::size_t budget) {
  auto index = [&vars](Var v) {
    return static_cast<std::size_t>(
        std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
  };
  std::vector<std::deque<Mask<W>>> buckets(64 * W + 1);
  std::unordered_set<Mask<W>, MaskHash<W>> seen;
  auto enqueue = [&](const Mask<W> &m) {
    if (seen.insert(m).second)
      buckets[m.size].push_back(m);
  };
  for (const Clause &c : f) {
    Mask<W> m;
    for (Lit x : c) {
      std::size_t i = index(x.var());
      (x.negative() ? m.neg : m.pos)[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    m.size = static_cast<unsigned>(c.size());
    enqueue(m);
  }

  std::vector<Mask<W>> active;
  std::vector<char> alive;
  std::size_t generated = 0;
  std::size_t smallest = 0;
  for (;;) {
    while (smallest < buckets.size() && buckets[smallest].empty())
      ++smallest;
    if (smallest == buckets.size())
      break;
    // FIFO inside a bucket keeps the run deterministic.
    Mask<W> given = buckets[smallest].front();
    buckets[smallest].pop_front();
    if (given.size == 0)
      return {true, ClauseSet{Clause{}}};
    bool redundant = false;
    for (std::size_t i = 0; i < active.size() && !redundant; ++i)
      redundant = alive[i] && subsumes(active[i], given);
    if (redundant)
      continue;
    for (std::size_t i = 0; i < active.size(); ++i)
      if (alive[i] && subsumes(given, active[i]))
        alive[i] = 0;
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (!alive[i] || (active[i].size > width && given.size > width))
        continue;
      Mask<W> r;
      if (!resolve(given, active[i], r))
        continue;
      if (++generated > budget)
        throw Error(Errc::budget_exceeded,
                    "resolution closure exceeded " + std::to_string(budget) +
                        " clauses");
      enqueue(r);
      if (r.size < smallest)
        smallest = r.size;
    }
    active.push_back(given);
    alive.push_back(1);
  }

  std::vector<Clause> out;
  for (std::size_t i = 0; i < active.size(); ++i) {
    if (!alive[i])
      continue;
    std::vector<Lit> lits;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      std::uint64_t bit = std::uint64_t{1} << (j % 64);
      if (active[i].pos[j / 64] & bit)
        lits.push_back(Lit::pos(vars[j]));
      else if (active[i].neg[j / 64] & bit)
        lits.push_back(Lit::neg(vars[j]));
    }
    out.push_back(Clause::from_sorted(std::move(lits)));
  }
  return {false, ClauseSet(std::move(out))};
}

} // namespace

Saturation saturate(const ClauseSet &f, unsigned width, std::size_t budget) {
  std::vector<Var> vars = f.vars();
  std::size_t n = vars.size();
  if (n <= 64)
    return run<1>(f, vars, width, budget);
  if (n <= 128)
    return run<2>(f, vars, width, budget);
  if (n <= 256)
    return run<4>(f, vars, width, budget);
  if (n <= 512)
    return run<8>(f, vars, width, budget);
  throw Error(Errc::budget_exceeded,
              "resolution closure over " + std::to_string(n) + " variables");
}

} // namespace repkit::detail
