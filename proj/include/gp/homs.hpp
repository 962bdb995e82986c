#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gp/conjugacy.hpp"

namespace gp {

// A homomorphism of graph products given by per-vertex data: an image for
// every nonidentity element of a table vertex, or for the generator of an
// infinite cyclic vertex.  The data is redundant on purpose (no choice of
// generating set enters the file formats); validate_family checks it.
struct VertexMapFamily {
  Presentation source;
  Presentation target;
  // images[v] has size order-1 for table vertices (images of elements
  // 1..order-1) and size 1 for infinite cyclic ones (image of the
  // generator).
  std::vector<std::vector<NormalForm>> images;

  const NormalForm& image_of(int v, std::int64_t nonzero_elem) const;
};

// Confirms the two invariant classes: within each vertex the images
// respect the multiplication table, and across each source edge the
// images commute in the target.
ValidityReport validate_family(const VertexMapFamily& f);

// Homomorphic extension to arbitrary elements.
NormalForm apply(const VertexMapFamily& f, const NormalForm& g);

// The identity endomorphism of p.
VertexMapFamily identity_family(const Presentation& p);

// The inner automorphism g -> w g w^-1.
VertexMapFamily inner(const Presentation& p, const NormalForm& w);

// Composition (f after g); requires g.target == f.source.
VertexMapFamily compose(const VertexMapFamily& f, const VertexMapFamily& g);

// True iff the two endomorphisms agree on every vertex generator datum.
bool same_map(const VertexMapFamily& f, const VertexMapFamily& g);

// If x is conjugate into G_v, the minimal-length w and b in G_v with
// x = w b w^-1: cyclically reduce, then trim the maximal star(v)-suffix
// of the conjugator into b.  Absent iff the cyclic reduction core is not
// a single v-syllable.  The minimal conjugator is unique; minimality is
// cross-checked against brute force in the tests.
std::optional<std::pair<NormalForm, Syllable>> minimal_conjugator_to_vertex(
    const Presentation& p, const NormalForm& x, int v);

// Vertices v with every generator image supported inside {v}.
VertexSet stabilized_vertices(const VertexMapFamily& f);

struct PointwiseInnerCheck {
  std::optional<NormalForm> witness;  // least g with f(g) not conjugate to g
  bool bounded = false;  // true when an infinite cyclic vertex made the
                         // length-2 check a bounded one
};

// Checks f(g) ~ g for every g of length <= 2 (exponents bounded by
// exp_bound on infinite cyclic vertices), in canonical order.
PointwiseInnerCheck pointwise_inner_up_to_length2(const VertexMapFamily& f,
                                                  int exp_bound = 8);

struct InnerDecision {
  enum class Verdict { Inner, NotInner, BoundedOnly } verdict;
  NormalForm conjugator;  // meaningful for Inner
  NormalForm witness;     // meaningful for NotInner
};

// Decides whether a valid endomorphism is the inner automorphism by some
// element, constructively.  Requires the source graph to admit a coneless
// subset.  Step 0 rejects on a length <= 2 conjugacy witness; step 1
// stabilizes a minimal coneless subset by composing with inverses of
// inner automorphisms obtained from minimal conjugators; step 2 verifies
// the adjusted map is the identity on all generators.  BoundedOnly is
// returned
// when infinite cyclic vertices kept step 0 from being exhaustive and
// step 2 fails without a conjugacy witness.
InnerDecision decide_inner(const VertexMapFamily& f, int exp_bound = 8);

}  // namespace gp
