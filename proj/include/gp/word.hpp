#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <vector>

#include "gp/presentation.hpp"

namespace gp {

// One nontrivial vertex-group element occurring in a word: a table index
// for table vertices, a nonzero exponent for infinite cyclic ones.
struct Syllable {
  int vertex = 0;
  std::int64_t elem = 0;
  auto operator<=>(const Syllable&) const = default;
};

// An arbitrary (not necessarily reduced) sequence of syllables.
using Word = std::vector<Syllable>;

// A reduced word in canonical order: no T1/T2 move applies after any
// sequence of T3 shuffles, and the sequence is the lexicographically least
// member of its shuffle class.  Equal group elements have identical
// canonical forms, so equality is plain sequence comparison.  Instances
// are produced by reduce() and the operations built on it.
struct NormalForm {
  std::vector<Syllable> syllables;

  bool empty() const { return syllables.empty(); }
  int length() const { return (int)syllables.size(); }
  auto operator<=>(const NormalForm&) const = default;
};

NormalForm single_syllable(const Presentation& p, const Syllable& s);

// Rewrites w to the canonical reduced word for the same group element.
//
// Reduction is left-to-right insertion: each incoming syllable scans the
// accumulated reduced word right to left, skipping syllables of adjacent
// vertices, and merges with the first same-vertex syllable it meets (T2),
// dropping the result if trivial (T1); otherwise it is appended.  The
// result is then put into canonical order by greedy least-available-
// syllable selection, which yields the lexicographically least member of
// the shuffle class because same-vertex syllables never commute past each
// other.
NormalForm reduce(const Presentation& p, const Word& w);

// True iff w is reduced and in canonical order.
bool is_canonical(const Presentation& p, const Word& w);

NormalForm multiply(const Presentation& p, const NormalForm& g,
                    const NormalForm& h);
NormalForm invert(const Presentation& p, const NormalForm& g);

// conjugate_by(w, g) = w g w^-1.
NormalForm conjugate_by(const Presentation& p, const NormalForm& w,
                        const NormalForm& g);

NormalForm power(const Presentation& p, const NormalForm& g, std::int64_t n);

// Vertices contributing syllables; shuffle-invariant.
VertexSet support(const NormalForm& g);

// Vertices whose syllable can be shuffled to the first (resp. last)
// position of some reduced expression.  FL(g) = LL(g^-1).
VertexSet first_vertices(const SimplicialGraph& graph, const NormalForm& g);
VertexSet last_vertices(const SimplicialGraph& graph, const NormalForm& g);

// Canonical retraction onto the full subgroup over x: delete syllables
// whose vertex is outside x, then reduce.  A homomorphism; retractions
// compose by intersecting their vertex sets.
NormalForm retract(const Presentation& p, const VertexSet& x,
                   const NormalForm& g);

// All reduced syllable sequences representing g, by BFS over single
// adjacent transpositions (T3).  Oracle machinery; guarded at length 10
// and closure size 10^5.
std::set<std::vector<Syllable>> shuffle_closure(const Presentation& p,
                                                const NormalForm& g);

}  // namespace gp
