#pragma once

#include <cstdint>
#include <vector>

#include "gp/graph.hpp"
#include "gp/table_group.hpp"

namespace gp {

// A concrete vertex group: a finite group given by a table (order >= 2,
// vertex groups are nontrivial) or the infinite cyclic group.
struct VertexGroupSpec {
  enum class Kind { Table, InfiniteCyclic } kind = Kind::InfiniteCyclic;
  FiniteGroupTable table;  // meaningful only when kind == Table

  static VertexGroupSpec infinite_cyclic() { return {}; }
  static VertexGroupSpec from_table(FiniteGroupTable t);
  bool is_table() const { return kind == Kind::Table; }
  bool operator==(const VertexGroupSpec&) const = default;
};

// The ambient object for everything: a simplicial graph together with a
// vertex group per vertex.  Element arithmetic inside a single vertex
// group is dispatched through here; elements are table indices for table
// vertices and exponents for infinite cyclic ones, identity always 0.
class Presentation {
 public:
  Presentation() = default;
  Presentation(SimplicialGraph graph, std::vector<VertexGroupSpec> groups);

  const SimplicialGraph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  const VertexGroupSpec& group(int v) const { return groups_.at(v); }
  bool is_table_vertex(int v) const { return group(v).is_table(); }
  bool has_infinite_vertex() const;

  std::int64_t elem_mul(int v, std::int64_t a, std::int64_t b) const;
  std::int64_t elem_inv(int v, std::int64_t a) const;
  bool elem_valid(int v, std::int64_t a) const;

  bool operator==(const Presentation&) const = default;

 private:
  SimplicialGraph graph_;
  std::vector<VertexGroupSpec> groups_;
};

}  // namespace gp
