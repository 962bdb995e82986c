#include "gp/graph.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <stdexcept>

#include "gp/errors.hpp"

namespace gp {

SimplicialGraph::SimplicialGraph(int vertex_count)
    : vertex_count_(vertex_count),
      adj_(vertex_count, std::vector<bool>(vertex_count, false)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

SimplicialGraph::SimplicialGraph(int vertex_count,
                                 const std::vector<std::pair<int, int>>& edges)
    : SimplicialGraph(vertex_count) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void SimplicialGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u][v] = adj_[v][u] = true;
}

bool SimplicialGraph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
    throw std::invalid_argument("vertex out of range");
  return adj_[u][v];
}

std::vector<std::pair<int, int>> SimplicialGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count_; ++u)
    for (int v = u + 1; v < vertex_count_; ++v)
      if (adj_[u][v]) out.emplace_back(u, v);
  return out;
}

VertexSet SimplicialGraph::all_vertices() const {
  VertexSet out(vertex_count_);
  for (int v = 0; v < vertex_count_; ++v) out[v] = v;
  return out;
}

VertexSet link(const SimplicialGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("vertex out of range");
  VertexSet out;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != v && g.adjacent(u, v)) out.push_back(u);
  return out;
}

VertexSet star(const SimplicialGraph& g, int v) {
  VertexSet out = link(g, v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

VertexSet star_set(const SimplicialGraph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("star_set of empty set");
  VertexSet acc = star(g, s[0]);
  for (size_t i = 1; i < s.size() && !acc.empty(); ++i)
    acc = set_intersection(acc, star(g, s[i]));
  return acc;
}

VertexSet central_vertices(const SimplicialGraph& g) {
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if ((int)link(g, v).size() == g.vertex_count() - 1) out.push_back(v);
  return out;
}

bool is_coneless(const SimplicialGraph& g, const VertexSet& u) {
  if (u.empty()) throw std::invalid_argument("is_coneless of empty set");
  return star_set(g, u).empty();
}

std::vector<VertexSet> minimal_coneless_subsets(const SimplicialGraph& g) {
  int n = g.vertex_count();
  if (n > 24) throw GuardError("minimal_coneless_subsets: graph too large");
  if (n == 0) return {};
  std::vector<uint32_t> star_mask(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : star(g, v)) star_mask[v] |= 1u << u;
  // inter[mask] = intersection of the stars over mask, tabulated over all
  // subsets (one word each; 64 MiB at the 24-vertex guard).  A subset is
  // coneless iff its entry is zero, and by monotonicity it is
  // inclusion-minimal iff dropping any single member makes the entry
  // nonzero again.
  uint32_t full = (1u << n) - 1;
  std::vector<uint32_t> inter(size_t(1) << n);
  inter[0] = full;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    int low = std::countr_zero(mask);
    inter[mask] = inter[mask & (mask - 1)] & star_mask[low];
  }
  std::vector<VertexSet> out;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    if (inter[mask] != 0) continue;
    bool minimal = true;
    for (uint32_t rest = mask; rest && minimal; rest &= rest - 1) {
      uint32_t bit = rest & -rest;
      if (inter[mask ^ bit] == 0) minimal = false;
    }
    if (!minimal) continue;
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> irreducible_components(const SimplicialGraph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    // DFS in the complement graph.
    std::vector<int> stack{start};
    comp[start] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (u != v && !g.adjacent(u, v) && comp[u] == -1) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }
  std::vector<VertexSet> out(ncomp);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool set_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace gp
