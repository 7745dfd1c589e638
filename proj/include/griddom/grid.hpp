// Grid-graph data model: vertices, edges, deletions, p-domination checking,
// column statistics, symmetry transforms and the empty-column normalization.
#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace griddom {

/// Raised when an argument is outside an operation's domain.
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a certified postcondition fails; indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Grid cell, 1-based. Row 1 is the bottom row, matching the usual figures.
struct Vertex {
  int row = 1;
  int col = 1;
  auto operator<=>(const Vertex&) const = default;
};

/// Unordered pair of L1-adjacent vertices, stored with the smaller endpoint first.
struct Edge {
  Vertex a, b;

  Edge(Vertex u, Vertex v) {
    if (std::abs(u.row - v.row) + std::abs(u.col - v.col) != 1)
      throw domain_error("edge endpoints must be at L1-distance 1");
    if (v < u) std::swap(u, v);
    a = u;
    b = v;
  }

  auto operator<=>(const Edge&) const = default;

  bool vertical() const { return a.col == b.col; }
  bool horizontal() const { return a.row == b.row; }
  int min_row() const { return a.row; }          // a <= b componentwise per adjacency
  int min_col() const { return std::min(a.col, b.col); }
};

using VertexSet = std::set<Vertex>;
using EdgeSet = std::set<Edge>;

/// An m x n grid graph, possibly with some of its edges deleted.
struct GridSpec {
  int rows = 1;
  int cols = 1;
  EdgeSet removed;

  explicit GridSpec(int m, int n, EdgeSet removed_edges = {})
      : rows(m), cols(n), removed(std::move(removed_edges)) {
    if (m < 1 || n < 1) throw domain_error("grid dimensions must be >= 1");
    for (const Edge& e : removed) {
      if (!contains(e.a) || !contains(e.b))
        throw domain_error("removed edge leaves the grid bounds");
    }
  }

  bool contains(Vertex v) const {
    return 1 <= v.row && v.row <= rows && 1 <= v.col && v.col <= cols;
  }

  /// Adjacency in this grid: L1-distance 1 and the edge not deleted.
  bool has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    if (std::abs(u.row - v.row) + std::abs(u.col - v.col) != 1) return false;
    return removed.find(Edge(u, v)) == removed.end();
  }
};

/// Per-column membership counts c_j = |D in column j| and their histogram
/// histogram[i] = number of columns with exactly i members.
struct ColumnStats {
  std::vector<int> c;          // size n
  std::vector<int> histogram;  // size m+1
};

/// One of the four grid symmetries {id, row flip, column flip, both}.
struct Symmetry {
  bool flip_rows = false;
  bool flip_cols = false;
};

struct DominationCheck {
  bool ok = false;
  std::optional<Vertex> failing;  // first failing vertex in (row, col) order
};

/// Open neighborhood of v in g, in ascending (row, col) order.
inline std::vector<Vertex> neighbors(const GridSpec& g, Vertex v) {
  if (!g.contains(v)) throw domain_error("vertex outside the grid");
  std::vector<Vertex> out;
  const Vertex candidates[4] = {{v.row - 1, v.col},
                                {v.row, v.col - 1},
                                {v.row, v.col + 1},
                                {v.row + 1, v.col}};
  for (Vertex u : candidates)
    if (g.contains(u) && g.has_edge(u, v)) out.push_back(u);
  return out;
}

/// All surviving edges of g, canonically ordered.
inline EdgeSet edge_set(const GridSpec& g) {
  EdgeSet out;
  for (int r = 1; r <= g.rows; ++r) {
    for (int c = 1; c <= g.cols; ++c) {
      if (c < g.cols) {
        Edge e({r, c}, {r, c + 1});
        if (!g.removed.count(e)) out.insert(e);
      }
      if (r < g.rows) {
        Edge e({r, c}, {r + 1, c});
        if (!g.removed.count(e)) out.insert(e);
      }
    }
  }
  return out;
}

/// Checks that every vertex outside D has at least p neighbors in D.
inline DominationCheck check_p_dominating(const GridSpec& g, const VertexSet& D,
                                          int p) {
  if (p < 1) throw domain_error("p must be >= 1");
  for (const Vertex& v : D)
    if (!g.contains(v)) throw domain_error("dominating-set vertex outside the grid");
  for (int r = 1; r <= g.rows; ++r) {
    for (int c = 1; c <= g.cols; ++c) {
      Vertex v{r, c};
      if (D.count(v)) continue;
      int dominators = 0;
      for (Vertex u : neighbors(g, v))
        if (D.count(u)) ++dominators;
      if (dominators < p) return {false, v};
    }
  }
  return {true, std::nullopt};
}

inline bool is_p_dominating(const GridSpec& g, const VertexSet& D, int p) {
  return check_p_dominating(g, D, p).ok;
}

inline ColumnStats column_stats(const GridSpec& g, const VertexSet& D) {
  ColumnStats s;
  s.c.assign(g.cols, 0);
  s.histogram.assign(g.rows + 1, 0);
  for (const Vertex& v : D) {
    if (!g.contains(v)) throw domain_error("vertex outside the grid");
    ++s.c[v.col - 1];
  }
  for (int x : s.c) ++s.histogram[x];
  return s;
}

/// Moves members rightward until no column is empty, preserving cardinality and
/// 2-domination. Each step takes the leftmost empty column t (its neighbors are
/// then necessarily full) and shifts one member from column t-1 into column t;
/// the donor row is the smallest row occupied in column t-2, or row 1 when t = 2.
inline VertexSet normalize_no_empty_columns(const GridSpec& g, const VertexSet& D) {
  if (!g.removed.empty())
    throw domain_error("normalization requires the unmodified grid");
  if (!is_p_dominating(g, D, 2))
    throw domain_error("input set is not 2-dominating");
  const std::size_t size = D.size();
  VertexSet cur = D;
  for (;;) {
    ColumnStats cs = column_stats(g, cur);
    int t = 0;
    for (int j = 1; j <= g.cols; ++j)
      if (cs.c[j - 1] == 0) {
        t = j;
        break;
      }
    if (t == 0) break;
    if (g.rows == 1)
      throw domain_error("cannot normalize a one-row grid with an empty column");
    int donor_row = 1;
    if (t >= 3) {
      for (int r = 1; r <= g.rows; ++r)
        if (cur.count({r, t - 2})) {
          donor_row = r;
          break;
        }
    }
    if (!cur.count({donor_row, t - 1}))
      throw internal_error("normalization donor column is not full");
    cur.erase({donor_row, t - 1});
    cur.insert({donor_row, t});
    if (cur.size() != size || !is_p_dominating(g, cur, 2))
      throw internal_error("normalization shift broke 2-domination");
  }
  return cur;
}

inline Vertex apply_symmetry(const GridSpec& g, Symmetry s, Vertex v) {
  if (!g.contains(v)) throw domain_error("vertex outside the grid");
  return {s.flip_rows ? g.rows + 1 - v.row : v.row,
          s.flip_cols ? g.cols + 1 - v.col : v.col};
}

inline Edge apply_symmetry(const GridSpec& g, Symmetry s, const Edge& e) {
  return Edge(apply_symmetry(g, s, e.a), apply_symmetry(g, s, e.b));
}

inline VertexSet apply_symmetry(const GridSpec& g, Symmetry s, const VertexSet& x) {
  VertexSet out;
  for (const Vertex& v : x) out.insert(apply_symmetry(g, s, v));
  return out;
}

inline EdgeSet apply_symmetry(const GridSpec& g, Symmetry s, const EdgeSet& x) {
  EdgeSet out;
  for (const Edge& e : x) out.insert(apply_symmetry(g, s, e));
  return out;
}

/// Image of the whole grid: same shape, removed edges mapped along.
inline GridSpec apply_symmetry(const GridSpec& g, Symmetry s) {
  return GridSpec(g.rows, g.cols, apply_symmetry(g, s, g.removed));
}

/// Renders members as a dot matrix, top row (row m) first, so the picture has
/// (1,1) at the bottom left.
inline std::string render_ascii(const GridSpec& g, const VertexSet& D) {
  std::string out;
  for (int r = g.rows; r >= 1; --r) {
    for (int c = 1; c <= g.cols; ++c) {
      if (c > 1) out += ' ';
      out += D.count({r, c}) ? "●" : "·";
    }
    if (r > 1) out += '\n';
  }
  return out;
}

namespace detail {

inline int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw domain_error("bad integer '" + s + "'");
  }
  if (pos != s.size()) throw domain_error("bad integer '" + s + "'");
  return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline Vertex parse_vertex_token(const std::string& tok) {
  auto parts = split(tok, ',');
  if (parts.size() != 2) throw domain_error("bad vertex '" + tok + "', want i,j");
  return {parse_int(parts[0]), parse_int(parts[1])};
}

}  // namespace detail

/// Parses the edge list syntax "i,j-i',j'" with ";" between edges.
inline EdgeSet parse_edge_list(const std::string& text, const GridSpec& g) {
  EdgeSet out;
  for (const std::string& tok : detail::split(text, ';')) {
    if (tok.empty()) continue;
    auto ends = detail::split(tok, '-');
    if (ends.size() != 2)
      throw domain_error("bad edge '" + tok + "', want i,j-i',j'");
    Vertex u = detail::parse_vertex_token(ends[0]);
    Vertex v = detail::parse_vertex_token(ends[1]);
    if (!g.contains(u) || !g.contains(v))
      throw domain_error("edge '" + tok + "' leaves the grid bounds");
    out.insert(Edge(u, v));
  }
  return out;
}

inline std::string format_edge_list(const EdgeSet& edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ';';
    out += std::to_string(e.a.row) + ',' + std::to_string(e.a.col) + '-' +
           std::to_string(e.b.row) + ',' + std::to_string(e.b.col);
  }
  return out;
}

/// Parses "i,j;i,j;..." into a vertex set.
inline VertexSet parse_vertex_list(const std::string& text, const GridSpec& g) {
  VertexSet out;
  for (const std::string& tok : detail::split(text, ';')) {
    if (tok.empty()) continue;
    Vertex v = detail::parse_vertex_token(tok);
    if (!g.contains(v)) throw domain_error("vertex '" + tok + "' outside the grid");
    out.insert(v);
  }
  return out;
}

inline std::string format_vertex_list(const VertexSet& vs) {
  std::string out;
  for (const Vertex& v : vs) {
    if (!out.empty()) out += ';';
    out += std::to_string(v.row) + ',' + std::to_string(v.col);
  }
  return out;
}

}  // namespace griddom
