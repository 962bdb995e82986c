#include "gp/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gp/errors.hpp"

namespace gp {

namespace {

// Position of the front-reachable syllable at vertex v, i.e. the first
// v-syllable, provided everything before it commutes with v.
std::optional<size_t> front_position(const SimplicialGraph& graph,
                                     const std::vector<Syllable>& w, int v) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i].vertex == v) return i;
    if (!graph.adjacent(w[i].vertex, v)) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

PSDecomposition ps_decomposition(const Presentation& p, const NormalForm& g) {
  PSDecomposition d;
  if (g.empty()) return d;
  VertexSet supp = support(g);
  d.s_vertices = set_intersection(supp, star_set(p.graph(), supp));
  Word p_syls, s_syls;
  for (const Syllable& s : g.syllables) {
    if (set_contains(d.s_vertices, s.vertex))
      s_syls.push_back(s);
    else
      p_syls.push_back(s);
  }
  d.p_part = reduce(p, p_syls);
  d.s_part = reduce(p, s_syls);
  return d;
}

bool is_cyclically_reduced(const Presentation& p, const NormalForm& g) {
  const auto& graph = p.graph();
  VertexSet fl = first_vertices(graph, g);
  VertexSet ll = last_vertices(graph, g);
  VertexSet s = ps_decomposition(p, g).s_vertices;
  return set_difference(set_intersection(fl, ll), s).empty();
}

CyclicReduction cyclic_reduction(const Presentation& p, const NormalForm& g) {
  const auto& graph = p.graph();
  CyclicReduction r;
  r.core = g;
  Word conj;
  while (true) {
    VertexSet fl = first_vertices(graph, r.core);
    VertexSet ll = last_vertices(graph, r.core);
    VertexSet s = ps_decomposition(p, r.core).s_vertices;
    VertexSet offending = set_difference(set_intersection(fl, ll), s);
    if (offending.empty()) break;
    int v = offending[0];
    auto pos = front_position(graph, r.core.syllables, v);
    if (!pos) throw std::logic_error("cyclic_reduction: lost front syllable");
    Syllable a = r.core.syllables[*pos];
    Word rest = r.core.syllables;
    rest.erase(rest.begin() + *pos);
    rest.push_back(a);  // a^-1 (a rest) a = rest a
    NormalForm next = reduce(p, rest);
    if (next.length() >= r.core.length())
      throw std::logic_error("cyclic_reduction: length did not decrease");
    r.core = next;
    conj.push_back(a);
  }
  r.conjugator = reduce(p, conj);
  return r;
}

namespace {

// BFS over single front-to-back rotations, recording for each reached
// element a prefix r with element = r^-1 * start * r.
std::map<NormalForm, NormalForm> rotation_closure(const Presentation& p,
                                                  const NormalForm& start,
                                                  size_t max_states) {
  const auto& graph = p.graph();
  std::map<NormalForm, NormalForm> seen;
  std::vector<NormalForm> work{start};
  seen.emplace(start, NormalForm{});
  while (!work.empty()) {
    NormalForm w = work.back();
    work.pop_back();
    NormalForm prefix = seen.at(w);
    for (int v : first_vertices(graph, w)) {
      auto pos = front_position(graph, w.syllables, v);
      Syllable a = w.syllables[*pos];
      Word rest = w.syllables;
      rest.erase(rest.begin() + *pos);
      rest.push_back(a);
      NormalForm next = reduce(p, rest);
      if (next.length() != w.length())
        throw std::logic_error("rotation of a cyclically reduced word shrank");
      NormalForm next_prefix =
          multiply(p, prefix, single_syllable(p, a));
      if (seen.emplace(next, next_prefix).second) {
        if (seen.size() > max_states)
          throw GuardError("cyclic_permutations: closure too large");
        work.push_back(next);
      }
    }
  }
  return seen;
}

}  // namespace

std::set<NormalForm> cyclic_permutations(const Presentation& p,
                                         const NormalForm& g) {
  if (!is_cyclically_reduced(p, g))
    throw std::invalid_argument("cyclic_permutations: not cyclically reduced");
  if (g.length() > 12) throw GuardError("cyclic_permutations: word too long");
  std::set<NormalForm> out;
  for (const auto& [elem, prefix] : rotation_closure(p, g, 100000))
    out.insert(elem);
  return out;
}

ConjugacyAnswer are_conjugate(const Presentation& p, const NormalForm& x,
                              const NormalForm& y) {
  CyclicReduction cx = cyclic_reduction(p, x);
  CyclicReduction cy = cyclic_reduction(p, y);
  // (i) lengths and supports
  if (cx.core.length() != cy.core.length() ||
      support(cx.core) != support(cy.core))
    return {false, std::nullopt};
  PSDecomposition dx = ps_decomposition(p, cx.core);
  PSDecomposition dy = ps_decomposition(p, cy.core);
  // (iii) stems conjugate componentwise in the vertex groups
  Word stem_conj;
  {
    auto it_x = dx.s_part.syllables.begin();
    for (const Syllable& sy : dy.s_part.syllables) {
      if (it_x == dx.s_part.syllables.end() || it_x->vertex != sy.vertex)
        return {false, std::nullopt};
      if (p.is_table_vertex(sy.vertex)) {
        auto c = vertex_conjugate(p.group(sy.vertex).table, (int)it_x->elem,
                                  (int)sy.elem);
        if (!c) return {false, std::nullopt};
        if (*c != 0) stem_conj.push_back({sy.vertex, *c});
      } else {
        if (it_x->elem != sy.elem) return {false, std::nullopt};  // abelian
      }
      ++it_x;
    }
    if (it_x != dx.s_part.syllables.end()) return {false, std::nullopt};
  }
  // (ii) p-parts are cyclic permutations of one another
  auto closure = [&] {
    if (dx.p_part.length() > 12)
      throw GuardError("are_conjugate: p-part too long for rotation search");
    return rotation_closure(p, dx.p_part, 100000);
  }();
  auto hit = closure.find(dy.p_part);
  if (hit == closure.end()) return {false, std::nullopt};
  const NormalForm& rot = hit->second;  // p(y0) = rot^-1 p(x0) rot
  // Assemble w = wy * rot^-1 * stem * wx^-1; then w x w^-1 = y.
  NormalForm w = multiply(p, cy.conjugator, invert(p, rot));
  w = multiply(p, w, reduce(p, stem_conj));
  w = multiply(p, w, invert(p, cx.conjugator));
  if (conjugate_by(p, w, x) != y)
    throw std::logic_error("are_conjugate: assembled conjugator fails");
  return {true, w};
}

std::vector<NormalForm> enumerate_elements(const Presentation& p, int max_len,
                                           int exp_bound, std::size_t guard) {
  std::vector<Syllable> alphabet;
  for (int v = 0; v < p.vertex_count(); ++v) {
    if (p.is_table_vertex(v)) {
      for (int e = 1; e < p.group(v).table.order(); ++e)
        alphabet.push_back({v, e});
    } else {
      for (int e = -exp_bound; e <= exp_bound; ++e)
        if (e != 0) alphabet.push_back({v, e});
    }
  }
  std::vector<NormalForm> out{NormalForm{}};
  std::set<NormalForm> level{NormalForm{}};
  for (int len = 1; len <= max_len; ++len) {
    std::set<NormalForm> next;
    for (const NormalForm& w : level) {
      for (const Syllable& s : alphabet) {
        NormalForm cand = multiply(p, w, single_syllable(p, s));
        if (cand.length() != len) continue;
        next.insert(cand);
        if (out.size() + next.size() > guard)
          throw GuardError("enumerate_elements: search space too large");
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

std::optional<NormalForm> conjugacy_oracle(const Presentation& p,
                                           const NormalForm& x,
                                           const NormalForm& y, int max_len,
                                           int exp_bound) {
  for (const NormalForm& w : enumerate_elements(p, max_len, exp_bound))
    if (conjugate_by(p, w, x) == y) return w;
  return std::nullopt;
}

std::vector<NormalForm> centralizer_generators(const Presentation& p,
                                               const Syllable& a) {
  if (!p.elem_valid(a.vertex, a.elem))
    throw std::invalid_argument("invalid syllable");
  std::vector<NormalForm> out;
  if (p.is_table_vertex(a.vertex)) {
    SubgroupHandle c = vertex_centralizer(p.group(a.vertex).table, (int)a.elem);
    for (int e : c.members)
      if (e != 0) out.push_back(single_syllable(p, {a.vertex, e}));
  } else {
    out.push_back(single_syllable(p, {a.vertex, 1}));
  }
  for (int u : link(p.graph(), a.vertex)) {
    if (p.is_table_vertex(u)) {
      for (int e : minimal_generating_set(p.group(u).table))
        out.push_back(single_syllable(p, {u, e}));
    } else {
      out.push_back(single_syllable(p, {u, 1}));
    }
  }
  for (const NormalForm& c : out) {
    NormalForm lhs = multiply(p, c, single_syllable(p, a));
    NormalForm rhs = multiply(p, single_syllable(p, a), c);
    if (lhs != rhs)
      throw std::logic_error("centralizer generator does not commute");
  }
  return out;
}

}  // namespace gp
