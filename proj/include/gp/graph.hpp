#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace gp {

// A set of vertex indices, always kept sorted ascending and duplicate-free.
using VertexSet = std::vector<int>;

// Finite simplicial graph on vertices 0..vertex_count-1: no loops, no
// multi-edges.  Edges are stored as ordered pairs (u,v) with u < v.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;
  explicit SimplicialGraph(int vertex_count);
  SimplicialGraph(int vertex_count,
                  const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return vertex_count_; }
  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);

  // Edges as sorted (u,v) pairs with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  VertexSet all_vertices() const;

  bool operator==(const SimplicialGraph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<bool>> adj_;
};

// Neighbours of v (never contains v itself).
VertexSet link(const SimplicialGraph& g, int v);

// link(v) together with v itself.
VertexSet star(const SimplicialGraph& g, int v);

// Intersection of the stars of all members of s; s must be nonempty.
VertexSet star_set(const SimplicialGraph& g, const VertexSet& s);

// Vertices adjacent to every other vertex.  On a one-vertex graph the
// single vertex is central.
VertexSet central_vertices(const SimplicialGraph& g);

// True iff the members of u have no common element in their stars.
// u must be nonempty.  Monotone: supersets of coneless sets are coneless.
bool is_coneless(const SimplicialGraph& g, const VertexSet& u);

// All inclusion-minimal coneless subsets, sorted lexicographically.
// Empty iff the graph has a central vertex.  Guarded at 24 vertices.
std::vector<VertexSet> minimal_coneless_subsets(const SimplicialGraph& g);

// Vertex sets of the connected components of the complement graph, each
// sorted, ordered by smallest member.  The graph product splits as the
// direct product of the corresponding full subgroups.
std::vector<VertexSet> irreducible_components(const SimplicialGraph& g);

// Set helpers used throughout.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, int v);
bool set_subset(const VertexSet& a, const VertexSet& b);

}  // namespace gp
