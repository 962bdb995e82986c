#include "gp/presentation.hpp"

#include <stdexcept>

namespace gp {

VertexGroupSpec VertexGroupSpec::from_table(FiniteGroupTable t) {
  if (t.order() < 2)
    throw std::invalid_argument("vertex groups must be nontrivial");
  VertexGroupSpec s;
  s.kind = Kind::Table;
  s.table = std::move(t);
  return s;
}

Presentation::Presentation(SimplicialGraph graph,
                           std::vector<VertexGroupSpec> groups)
    : graph_(std::move(graph)), groups_(std::move(groups)) {
  if ((int)groups_.size() != graph_.vertex_count())
    throw std::invalid_argument("one vertex group required per vertex");
}

bool Presentation::has_infinite_vertex() const {
  for (const auto& g : groups_)
    if (!g.is_table()) return true;
  return false;
}

std::int64_t Presentation::elem_mul(int v, std::int64_t a,
                                    std::int64_t b) const {
  const auto& g = group(v);
  if (g.is_table()) return g.table.product((int)a, (int)b);
  return a + b;
}

std::int64_t Presentation::elem_inv(int v, std::int64_t a) const {
  const auto& g = group(v);
  if (g.is_table()) return g.table.inverse((int)a);
  return -a;
}

bool Presentation::elem_valid(int v, std::int64_t a) const {
  if (v < 0 || v >= vertex_count()) return false;
  const auto& g = group(v);
  if (g.is_table()) return a >= 1 && a < g.table.order();
  return a != 0;
}

}  // namespace gp
