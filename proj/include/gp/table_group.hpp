#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gp {

// Report produced by the validators: valid iff no violations.
struct ValidityReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

// A finite group given by its full multiplication table.  Elements are
// 0..order-1 and the identity is always element 0, which makes the
// "nontrivial syllable" invariant a plain nonzero check everywhere else.
class FiniteGroupTable {
 public:
  FiniteGroupTable() = default;
  FiniteGroupTable(int order, std::vector<int> product_row_major);

  int order() const { return order_; }
  int product(int a, int b) const { return table_[a * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int conjugate(int c, int a) const;  // c a c^-1
  int power(int a, long long n) const;

  bool operator==(const FiniteGroupTable&) const = default;

 private:
  int order_ = 1;
  std::vector<int> table_{0};
  std::vector<int> inverse_{0};
};

// Checks all table invariants: identity row/column, Latin-square property,
// associativity, inverses.  Violations are reported, not thrown.
ValidityReport validate_table(int order, const std::vector<int>& row_major);

// A verified subgroup of a parent table: sorted members containing 0,
// closed under product and inverse.
struct SubgroupHandle {
  std::vector<int> members;
  bool operator==(const SubgroupHandle&) const = default;
};

// Class of finite groups a quotient must belong to.
struct ClassTag {
  enum class Kind { AllFinite, PFinite } kind = Kind::AllFinite;
  int p = 0;  // prime, used when kind == PFinite

  static ClassTag all_finite() { return {Kind::AllFinite, 0}; }
  static ClassTag p_finite(int p);
  bool admits_order(int q) const;  // may a C-quotient have this order?
};

// Subgroup generated by a set of elements (identity always included).
SubgroupHandle generated_subgroup(const FiniteGroupTable& t,
                                  const std::vector<int>& gens);

// Sorted, contains 0, closed under product and inverse.
bool is_subgroup(const FiniteGroupTable& t, const SubgroupHandle& h);

bool is_normal(const FiniteGroupTable& t, const SubgroupHandle& h);

// Least c with c a c^-1 = b, or absent.
std::optional<int> vertex_conjugate(const FiniteGroupTable& t, int a, int b);

// {c : ca = ac} as a verified subgroup.
SubgroupHandle vertex_centralizer(const FiniteGroupTable& t, int a);

// Every subgroup of t, sorted by member lists.  Guarded at order 256.
std::vector<SubgroupHandle> all_subgroups(const FiniteGroupTable& t);

// Normal subgroups N with |t:N| <= k whose quotient order is admitted by
// the class tag (for PFinite(p): a power of p).
std::vector<SubgroupHandle> normal_subgroups_of_index_at_most(
    const FiniteGroupTable& t, int k, const ClassTag& c);

// Intersection of all of the above; invariant under every endomorphism.
SubgroupHandle fully_characteristic_core(const FiniteGroupTable& t, int k,
                                         const ClassTag& c);

// A self-map given by its full image vector.
struct Endomorphism {
  std::vector<int> image;
  bool is_automorphism = false;
  int operator()(int x) const { return image[x]; }
  bool operator==(const Endomorphism&) const = default;
};

// All endomorphisms of t, sorted by image vector.  The search runs over
// images of a greedily computed minimal generating set, with a full
// homomorphism check on each candidate.  Guarded at order 16.
std::vector<Endomorphism> enumerate_endomorphisms(const FiniteGroupTable& t);

// Quotient by a normal subgroup: coset table with the identity coset at
// index 0 and cosets ordered by their least member, plus the projection.
struct QuotientResult {
  FiniteGroupTable table;
  std::vector<int> projection;  // element -> coset index
};
QuotientResult quotient(const FiniteGroupTable& t, const SubgroupHandle& n);

// K_p: the subgroup generated by all commutators and all p-th powers.
// The quotient by it is elementary abelian of exponent dividing p.
SubgroupHandle kp_subgroup(const FiniteGroupTable& t, int p);

// Automorphisms acting trivially mod K_p.  For a p-group the count is a
// power of p.  Guarded at order 16.
std::vector<Endomorphism> aut_p(const FiniteGroupTable& t, int p);

// Direct product table with elements encoded as x*|B| + y.
FiniteGroupTable direct_product_table(const FiniteGroupTable& a,
                                      const FiniteGroupTable& b);

// Cyclic group of order n (addition mod n).
FiniteGroupTable cyclic_table(int n);

// The unique decomposition f(x,y) = (alpha(x) delta(y), gamma(x) beta(y))
// of an endomorphism of a direct product, obtained by restricting f to the
// two factor embeddings.
struct DirectDecomposition {
  std::vector<int> alpha;  // End(A)
  std::vector<int> gamma;  // Hom(A,B)
  std::vector<int> delta;  // Hom(B,A)
  std::vector<int> beta;   // End(B)
};
DirectDecomposition decompose_direct_endomorphism(const FiniteGroupTable& a,
                                                  const FiniteGroupTable& b,
                                                  const Endomorphism& f);

// Greedy irredundant generating set, scanning elements in index order.
std::vector<int> minimal_generating_set(const FiniteGroupTable& t);

}  // namespace gp
