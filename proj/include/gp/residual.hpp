#pragma once

#include <optional>
#include <variant>

#include "gp/homs.hpp"

namespace gp {

// Per-vertex finite quotient: table vertices keep themselves (or pass to
// a proper quotient by a normal subgroup), infinite cyclic vertices map
// onto Z/n.  Induces a homomorphism onto a finite-vertex-group
// presentation over the same graph.
struct VertexQuotient {
  enum class Kind { Identity, TableQuotient, Modulus } kind = Kind::Identity;
  SubgroupHandle subgroup;  // TableQuotient
  long long modulus = 0;    // Modulus, >= 2

  static VertexQuotient identity() { return {}; }
  static VertexQuotient by_subgroup(SubgroupHandle n);
  static VertexQuotient by_modulus(long long n);
  bool operator==(const VertexQuotient&) const = default;
};

struct QuotientFamily {
  Presentation source;
  std::vector<VertexQuotient> quotients;  // one per vertex
  ClassTag class_tag;
};

// The quotient presentation together with the validated connecting map.
struct InducedQuotient {
  Presentation presentation;
  VertexMapFamily map;
};
InducedQuotient induced_quotient_presentation(const QuotientFamily& q);

// A finite-quotient certificate for a pair of elements: either their
// images differ (with lengths and supports preserved) or their images are
// not conjugate in the quotient.  Everything here is re-checkable from
// the stored data alone.
struct SeparationWitness {
  enum class Kind { Inequality, NonConjugacy } kind = Kind::NonConjugacy;
  QuotientFamily family;
  NormalForm source_x, source_y;  // cyclically reduced pair being separated
  NormalForm image_x, image_y;
  int escalations = 0;  // modulus doublings that were needed
};

// Re-runs every check a witness asserts: family validity and class
// membership, images matching the induced map, preserved lengths,
// supports and cyclic reducedness, and the kind's predicate in the
// quotient presentation.
ValidityReport verify_witness(const SeparationWitness& w);

// A quotient family under which f and g stay distinct, with lengths,
// supports and cyclic reducedness preserved.  f, g must be cyclically
// reduced and distinct.  Moduli start at the least n > 2*(max absolute
// exponent) (least sufficient power of p under PFinite) and double until
// verification passes, capped at 2^20.
QuotientFamily separating_quotient(const Presentation& p, const NormalForm& f,
                                   const NormalForm& g, const ClassTag& c);

// Convenience: separating_quotient packaged as a verified Inequality
// witness.
SeparationWitness inequality_witness(const Presentation& p,
                                     const NormalForm& f, const NormalForm& g,
                                     const ClassTag& c);

struct SeparationOutcome {
  enum class Kind { Witness, AlreadyConjugate, Unknown } kind = Kind::Unknown;
  std::optional<SeparationWitness> witness;
  NormalForm conjugator;  // for AlreadyConjugate
};

// Tries to certify non-conjugacy of f and g in a finite quotient.
// Conjugate pairs come back AlreadyConjugate.  Covered cases (support or
// length
// mismatch of the cyclically reduced pair, or empty stem) always produce
// a witness; outside them modulus escalation may end in Unknown, which is
// an honest outcome, not an error.
SeparationOutcome separate_conjugacy(const Presentation& p,
                                     const NormalForm& f, const NormalForm& g,
                                     const ClassTag& c);

struct CdWitness {
  NormalForm g;  // apply(f, g) is not conjugate to g, verified
  SeparationWitness witness;
};

// For an automorphism candidate on a graph without central vertices:
// either a conjugacy-distinguishing element with its separation witness,
// or the decide_inner verdict when no element of length <= 2 works.
std::variant<CdWitness, InnerDecision> cd_witness_for_automorphism(
    const VertexMapFamily& f, const ClassTag& c, int exp_bound = 8);

// Characteristic core of a normal subgroup: the intersection of its
// preimages under every automorphism.  Guarded at order 16.
SubgroupHandle grossman_core(const FiniteGroupTable& t,
                             const SubgroupHandle& n);

}  // namespace gp
