// Exact gamma_p for an m x n grid minus an arbitrary edge set, by frontier
// dynamic programming over column states; exact b_p by minimal-removal search;
// enumeration of all minimum sets.
//
// The frontier state stores one base-3 tag per cell of the current column:
//   0 = IN (selected), 1 = OUT with demand met, 2 = OUT still owed one
//   dominator, which only the right-hand neighbor can provide.
// A residual demand of two or more is infeasible (a cell has exactly one
// undecided neighbor, its right one) and such states are pruned on creation.
#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "griddom/grid.hpp"

namespace griddom {

struct SolveResult {
  int gamma = 0;
  std::optional<VertexSet> witness;
};

struct BondageResult {
  bool found = false;   // false: no removal of <= b edges raises gamma_p
  int b = 0;            // witness size when found, else the k_max searched
  EdgeSet witness_edges;
  int gamma_before = 0;
  int gamma_after = 0;
};

namespace detail {

constexpr int kMaxRows = 10;
constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max() / 2;

inline int pow3(int e) {
  int v = 1;
  while (e-- > 0) v *= 3;
  return v;
}

inline int tag_of(int state, int row) {  // row is 0-based
  return state / pow3(row) % 3;
}

// (state, mask) -> next state, or -1 when infeasible. hmask marks rows whose
// incoming horizontal edge is deleted, vmask rows r with the vertical edge
// (r, r+1) of the new column deleted.
inline int transition(int m, int p, int state, unsigned mask, unsigned hmask,
                      unsigned vmask) {
  for (int r = 0; r < m; ++r)
    if (tag_of(state, r) == 2 && (!((mask >> r) & 1u) || ((hmask >> r) & 1u)))
      return -1;
  int next = 0;
  int weight = 1;
  for (int r = 0; r < m; ++r, weight *= 3) {
    if ((mask >> r) & 1u) continue;  // tag 0 contributes nothing
    int dominators = 0;
    if (r > 0 && ((mask >> (r - 1)) & 1u) && !((vmask >> (r - 1)) & 1u))
      ++dominators;
    if (r + 1 < m && ((mask >> (r + 1)) & 1u) && !((vmask >> r) & 1u))
      ++dominators;
    if (tag_of(state, r) == 0 && !((hmask >> r) & 1u)) ++dominators;
    const int need = p - dominators;
    if (need >= 2) return -1;
    next += (need <= 0 ? 1 : 2) * weight;
  }
  return next;
}

// Dense (state, mask) -> next table for one junction pattern. Shared across
// solves so that bondage sweeps, which revisit the same junction patterns
// thousands of times, pay for each table once.
class TransitionTable {
 public:
  TransitionTable(int m, int p, unsigned hmask, unsigned vmask)
      : masks_(1u << m), next_(static_cast<std::size_t>(pow3(m)) << m) {
    const int states = pow3(m);
    for (int s = 0; s < states; ++s)
      for (unsigned mask = 0; mask < masks_; ++mask)
        next_[static_cast<std::size_t>(s) * masks_ + mask] =
            transition(m, p, s, mask, hmask, vmask);
  }

  std::int32_t next(int state, unsigned mask) const {
    return next_[(static_cast<std::size_t>(state) * masks_) + mask];
  }

 private:
  unsigned masks_;
  std::vector<std::int32_t> next_;
};

inline std::shared_ptr<const TransitionTable> transition_table(int m, int p,
                                                               unsigned hmask,
                                                               unsigned vmask) {
  using Key = std::tuple<int, int, unsigned, unsigned>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const TransitionTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[Key{m, p, hmask, vmask}];
  if (!slot) slot = std::make_shared<const TransitionTable>(m, p, hmask, vmask);
  return slot;
}

// Shared scaffolding for solve / enumerate: per-column junction patterns and
// the backward table best[j][s] = cheapest completion of columns j+1..n from
// state s after column j.
struct FrontierDp {
  // Dense tables are worth caching only while 3^m * 2^m stays small; past
  // that the transitions are recomputed on the fly.
  static constexpr int kMaxTabledRows = 8;

  int m, n, p, states;
  int initial;  // virtual column 0: all rows OUT with demand met
  std::vector<unsigned> hmask, vmask;                       // 1-based columns
  std::vector<std::shared_ptr<const TransitionTable>> tab;  // 1-based columns
  std::vector<std::vector<std::int32_t>> best;              // [0..n][state]

  std::int32_t next(int j, int s, unsigned mask) const {
    if (tab[j]) return tab[j]->next(s, mask);
    return transition(m, p, s, mask, hmask[j], vmask[j]);
  }

  FrontierDp(const GridSpec& g, int p_in) : m(g.rows), n(g.cols), p(p_in) {
    if (m > kMaxRows)
      throw domain_error("exact solver supports at most " +
                         std::to_string(kMaxRows) + " rows");
    if (p < 1) throw domain_error("p must be >= 1");
    states = pow3(m);
    initial = (states - 1) / 2;  // all digits 1
    hmask.assign(n + 1, 0);
    vmask.assign(n + 1, 0);
    for (const Edge& e : g.removed) {
      if (e.horizontal())
        hmask[e.b.col] |= 1u << (e.a.row - 1);
      else
        vmask[e.a.col] |= 1u << (e.a.row - 1);
    }
    tab.resize(n + 1);
    if (m <= kMaxTabledRows)
      for (int j = 1; j <= n; ++j)
        tab[j] = transition_table(m, p, hmask[j], vmask[j]);

    best.assign(n + 1, std::vector<std::int32_t>(states, kInf));
    for (int s = 0; s < states; ++s) {
      bool open = false;
      for (int r = 0; r < m; ++r) open = open || tag_of(s, r) == 2;
      best[n][s] = open ? kInf : 0;
    }
    for (int j = n; j >= 1; --j) {
      for (int s = 0; s < states; ++s) {
        std::int32_t b = kInf;
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
          const std::int32_t nxt = next(j, s, mask);
          if (nxt < 0 || best[j][nxt] >= kInf) continue;
          const std::int32_t cost = std::popcount(mask) + best[j][nxt];
          if (cost < b) b = cost;
        }
        best[j - 1][s] = b;
      }
    }
  }

  int gamma() const { return best[0][initial]; }

  template <typename Visit>
  bool walk_optimal(std::size_t cap, Visit&& visit) const {
    std::vector<Vertex> partial;
    std::size_t emitted = 0;
    return walk(0, initial, partial, cap, emitted, visit);
  }

 private:
  template <typename Visit>
  bool walk(int j, int s, std::vector<Vertex>& partial, std::size_t cap,
            std::size_t& emitted, Visit&& visit) const {
    if (j == n) {
      visit(VertexSet(partial.begin(), partial.end()));
      return cap == 0 || ++emitted < cap;
    }
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      const std::int32_t nxt = next(j + 1, s, mask);
      if (nxt < 0 || best[j + 1][nxt] >= kInf) continue;
      if (static_cast<std::int32_t>(std::popcount(mask)) + best[j + 1][nxt] !=
          best[j][s])
        continue;
      const std::size_t placed = partial.size();
      for (int r = 0; r < m; ++r)
        if ((mask >> r) & 1u) partial.push_back({r + 1, j + 1});
      const bool keep_going = walk(j + 1, nxt, partial, cap, emitted, visit);
      partial.resize(placed);
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace detail

/// Exact gamma_p of g (deleted edges respected). The witness, when requested,
/// is the one with the lexicographically smallest column-mask sequence, so
/// repeated runs and independent implementations agree byte for byte.
inline SolveResult gamma_p_exact(const GridSpec& g, int p,
                                 bool want_witness = false) {
  detail::FrontierDp dp(g, p);
  SolveResult result;
  result.gamma = dp.gamma();
  if (want_witness) {
    VertexSet witness;
    dp.walk_optimal(1, [&](VertexSet s) { witness = std::move(s); });
    if (static_cast<int>(witness.size()) != result.gamma ||
        !is_p_dominating(g, witness, p))
      throw internal_error("solver produced an invalid witness");
    result.witness = std::move(witness);
  }
  return result;
}

/// Visits every minimum p-dominating set of g in deterministic order
/// (ascending column-mask sequences). cap = 0 visits all of them.
template <typename Visit>
inline void for_each_min_set(const GridSpec& g, int p, std::size_t cap,
                             Visit&& visit) {
  detail::FrontierDp dp(g, p);
  dp.walk_optimal(cap, visit);
}

/// All minimum p-dominating sets. With cap = 0 this runs the exhaustive
/// subset scan (only for grids of at most 20 vertices); with cap > 0 it
/// enumerates by solver traceback, stopping after cap sets.
inline std::vector<VertexSet> enumerate_min_sets(const GridSpec& g, int p,
                                                 std::size_t cap = 0) {
  std::vector<VertexSet> out;
  if (cap > 0) {
    for_each_min_set(g, p, cap, [&](VertexSet s) { out.push_back(std::move(s)); });
    return out;
  }
  const int cells = g.rows * g.cols;
  if (cells > 20)
    throw domain_error("exhaustive enumeration limited to 20 vertices; pass a cap");
  std::vector<Vertex> verts;
  for (int r = 1; r <= g.rows; ++r)
    for (int c = 1; c <= g.cols; ++c) verts.push_back({r, c});
  int bestSize = cells + 1;
  for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
    const int size = std::popcount(mask);
    if (size > bestSize) continue;
    VertexSet D;
    for (int i = 0; i < cells; ++i)
      if ((mask >> i) & 1u) D.insert(verts[i]);
    if (!is_p_dominating(g, D, p)) continue;
    if (size < bestSize) {
      bestSize = size;
      out.clear();
    }
    out.push_back(std::move(D));
  }
  return out;
}

/// Exact b_p by minimal-removal search: try every k-subset of surviving edges
/// in lexicographic order for k = 1, 2, ..., k_max and return the first subset
/// whose removal raises gamma_p. Requires a pristine grid with at least one
/// edge. Exhausting k_max is reported as found = false, not as an error.
inline BondageResult bondage_p_exact(const GridSpec& g, int p, int k_max = 3) {
  if (!g.removed.empty())
    throw domain_error("bondage is defined on the unmodified grid");
  const EdgeSet all = edge_set(g);
  if (all.empty()) throw domain_error("bondage undefined for an edgeless graph");
  if (k_max < 1) throw domain_error("k_max must be >= 1");

  const int before = gamma_p_exact(g, p).gamma;
  const std::vector<Edge> edges(all.begin(), all.end());
  const int e = static_cast<int>(edges.size());

  for (int k = 1; k <= std::min(k_max, e); ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      EdgeSet removal;
      for (int i : idx) removal.insert(edges[i]);
      const int after = gamma_p_exact(GridSpec(g.rows, g.cols, removal), p).gamma;
      if (after > before) {
        BondageResult res;
        res.found = true;
        res.b = k;
        res.witness_edges = std::move(removal);
        res.gamma_before = before;
        res.gamma_after = after;
        return res;
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == e - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  BondageResult res;
  res.found = false;
  res.b = k_max;
  res.gamma_before = before;
  res.gamma_after = before;
  return res;
}

}  // namespace griddom
