#pragma once

#include <optional>
#include <set>
#include <vector>

#include "gp/word.hpp"

namespace gp {

// The unique factorization g = p_part * s_part where the stem s_part
// carries S(g) = supp(g) intersected with the common star of supp(g), and
// the two parts commute.  Stem vertices are pairwise adjacent, so the
// stem has exactly one syllable per stem vertex.
struct PSDecomposition {
  NormalForm p_part;
  NormalForm s_part;
  VertexSet s_vertices;
};

// g = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicReduction {
  NormalForm core;
  NormalForm conjugator;
};

struct ConjugacyAnswer {
  bool conjugate = false;
  // When conjugate: conjugator * x * conjugator^-1 = y, verified by
  // multiplication before being returned.
  std::optional<NormalForm> conjugator;
};

PSDecomposition ps_decomposition(const Presentation& p, const NormalForm& g);

// Criterion: (FL(g) intersect LL(g)) minus S(g) is empty.
bool is_cyclically_reduced(const Presentation& p, const NormalForm& g);

// Deterministic: while the criterion fails, extract the front syllable at
// the least offending vertex and conjugate it away.  Strictly decreases
// length at each step.
CyclicReduction cyclic_reduction(const Presentation& p, const NormalForm& g);

// All elements expressible by cyclic permutations of reduced expressions
// of g, via BFS over single front-to-back syllable rotations of canonical
// forms.  g must be cyclically reduced; guarded at length 12 and closure
// size 10^5.
std::set<NormalForm> cyclic_permutations(const Presentation& p,
                                         const NormalForm& g);

// Decides conjugacy via the graph-product criterion: cyclically reduce
// both inputs, compare lengths and supports, match the p-parts up to
// cyclic permutation, and conjugate the stems componentwise in the vertex
// groups.  Positive answers carry an assembled, verified conjugator.
ConjugacyAnswer are_conjugate(const Presentation& p, const NormalForm& x,
                              const NormalForm& y);

// Brute-force cross-check: least w (by length, then canonical order) with
// |w| <= max_len and w x w^-1 = y, searching syllables with exponents
// bounded by exp_bound on infinite cyclic vertices.  Absence means "none
// within the bound", not non-conjugacy.  Search space guarded at 10^7.
std::optional<NormalForm> conjugacy_oracle(const Presentation& p,
                                           const NormalForm& x,
                                           const NormalForm& y, int max_len,
                                           int exp_bound);

// Enumerates canonical forms of all elements of length <= max_len, level
// by level in (length, lex) order.  Shared by the oracle and the tests.
std::vector<NormalForm> enumerate_elements(const Presentation& p, int max_len,
                                           int exp_bound,
                                           std::size_t guard = 10000000);

// Generators of the centralizer of a single syllable a at vertex v:
// the vertex-group centralizer of a, plus generators of every vertex
// group in link(v).
std::vector<NormalForm> centralizer_generators(const Presentation& p,
                                               const Syllable& a);

}  // namespace gp
