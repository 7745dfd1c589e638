// Seeded input generators for verification sweeps and property tests. All
// randomness flows through the caller's engine with plain modular draws, so a
// fixed seed reproduces the same cases on every run.
#pragma once

#include <random>
#include <vector>

#include "griddom/grid.hpp"

namespace griddom {

namespace detail {

template <typename T>
inline void shuffle_in_place(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng() % i]);
}

}  // namespace detail

/// A 2-dominating set of the pristine m x n grid, m >= 2. Starts from the full
/// vertex set minus a few pairwise non-adjacent interior columns (which keeps
/// it 2-dominating and gives the set genuinely empty columns), then randomly
/// drops further vertices as long as validity survives.
inline VertexSet random_set_with_gaps(int m, int n, std::mt19937_64& rng) {
  if (m < 2) throw domain_error("random_set_with_gaps requires m >= 2");
  GridSpec g(m, n);
  std::vector<int> interior;
  for (int j = 2; j <= n - 1; ++j) interior.push_back(j);
  detail::shuffle_in_place(interior, rng);
  std::vector<int> gaps;
  const std::size_t want = n >= 3 ? 1 + rng() % 2 : 0;
  for (int j : interior) {
    bool adjacent = false;
    for (int z : gaps) adjacent = adjacent || std::abs(z - j) <= 1;
    if (!adjacent) gaps.push_back(j);
    if (gaps.size() >= want) break;
  }
  VertexSet D;
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= n; ++c)
      if (std::find(gaps.begin(), gaps.end(), c) == gaps.end()) D.insert({r, c});
  std::vector<Vertex> order(D.begin(), D.end());
  detail::shuffle_in_place(order, rng);
  for (const Vertex& v : order) {
    if (rng() % 2 == 0) continue;
    D.erase(v);
    if (!is_p_dominating(g, D, 2)) D.insert(v);
  }
  return D;
}

/// k distinct edges of g, drawn without replacement.
inline EdgeSet random_removed_edges(const GridSpec& g, int k,
                                    std::mt19937_64& rng) {
  const EdgeSet all = edge_set(g);
  std::vector<Edge> pool(all.begin(), all.end());
  if (k > static_cast<int>(pool.size()))
    throw domain_error("not enough edges to remove");
  detail::shuffle_in_place(pool, rng);
  return EdgeSet(pool.begin(), pool.begin() + k);
}

}  // namespace griddom
