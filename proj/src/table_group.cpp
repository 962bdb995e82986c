#include "gp/table_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gp/errors.hpp"

namespace gp {

FiniteGroupTable::FiniteGroupTable(int order, std::vector<int> row_major)
    : order_(order), table_(std::move(row_major)) {
  ValidityReport r = validate_table(order_, table_);
  if (!r.valid())
    throw std::invalid_argument("invalid group table: " + r.violations[0]);
  inverse_.assign(order_, 0);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (product(a, b) == 0) inverse_[a] = b;
}

int FiniteGroupTable::conjugate(int c, int a) const {
  return product(product(c, a), inverse(c));
}

int FiniteGroupTable::power(int a, long long n) const {
  if (n < 0) return power(inverse(a), -n);
  int acc = 0;
  int base = a;
  while (n > 0) {
    if (n & 1) acc = product(acc, base);
    base = product(base, base);
    n >>= 1;
  }
  return acc;
}

ValidityReport validate_table(int order, const std::vector<int>& t) {
  ValidityReport r;
  if (order <= 0) {
    r.violations.push_back("order must be positive");
    return r;
  }
  if ((int)t.size() != order * order) {
    r.violations.push_back("table size is not order^2");
    return r;
  }
  for (int x : t)
    if (x < 0 || x >= order) {
      r.violations.push_back("table entry out of range");
      return r;
    }
  auto at = [&](int a, int b) { return t[a * order + b]; };
  for (int a = 0; a < order; ++a) {
    if (at(0, a) != a) r.violations.push_back("row 0 is not the identity map");
    if (at(a, 0) != a)
      r.violations.push_back("column 0 is not the identity map");
  }
  for (int a = 0; a < order; ++a) {
    std::vector<bool> seen_row(order, false), seen_col(order, false);
    for (int b = 0; b < order; ++b) {
      seen_row[at(a, b)] = true;
      seen_col[at(b, a)] = true;
    }
    for (int x = 0; x < order; ++x) {
      if (!seen_row[x])
        r.violations.push_back("row " + std::to_string(a) +
                               " is not a permutation");
      if (!seen_col[x])
        r.violations.push_back("column " + std::to_string(a) +
                               " is not a permutation");
    }
  }
  if (!r.violations.empty()) return r;
  for (int a = 0; a < order; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < order; ++b)
      if (at(a, b) == 0) has_inverse = true;
    if (!has_inverse)
      r.violations.push_back("element " + std::to_string(a) +
                             " has no inverse");
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          r.violations.push_back("associativity fails at (" +
                                 std::to_string(a) + "," + std::to_string(b) +
                                 "," + std::to_string(c) + ")");
          return r;
        }
  return r;
}

ClassTag ClassTag::p_finite(int p) {
  if (p < 2) throw std::invalid_argument("p must be prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("p must be prime");
  return {Kind::PFinite, p};
}

bool ClassTag::admits_order(int q) const {
  if (kind == Kind::AllFinite) return true;
  while (q % p == 0) q /= p;
  return q == 1;
}

SubgroupHandle generated_subgroup(const FiniteGroupTable& t,
                                  const std::vector<int>& gens) {
  std::vector<bool> in(t.order(), false);
  in[0] = true;
  std::vector<int> work{0};
  std::vector<int> g = gens;
  for (int x : gens) g.push_back(t.inverse(x));
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int y : g) {
      int z = t.product(x, y);
      if (!in[z]) {
        in[z] = true;
        work.push_back(z);
      }
    }
  }
  SubgroupHandle h;
  for (int x = 0; x < t.order(); ++x)
    if (in[x]) h.members.push_back(x);
  return h;
}

bool is_subgroup(const FiniteGroupTable& t, const SubgroupHandle& h) {
  const auto& m = h.members;
  if (!std::is_sorted(m.begin(), m.end())) return false;
  if (m.empty() || m[0] != 0) return false;
  for (int x : m) {
    if (x < 0 || x >= t.order()) return false;
    if (!std::binary_search(m.begin(), m.end(), t.inverse(x))) return false;
    for (int y : m)
      if (!std::binary_search(m.begin(), m.end(), t.product(x, y)))
        return false;
  }
  return true;
}

bool is_normal(const FiniteGroupTable& t, const SubgroupHandle& h) {
  for (int g = 0; g < t.order(); ++g)
    for (int x : h.members)
      if (!std::binary_search(h.members.begin(), h.members.end(),
                              t.conjugate(g, x)))
        return false;
  return true;
}

std::optional<int> vertex_conjugate(const FiniteGroupTable& t, int a, int b) {
  if (a < 0 || a >= t.order() || b < 0 || b >= t.order())
    throw std::invalid_argument("element out of range");
  for (int c = 0; c < t.order(); ++c)
    if (t.conjugate(c, a) == b) return c;
  return std::nullopt;
}

SubgroupHandle vertex_centralizer(const FiniteGroupTable& t, int a) {
  if (a < 0 || a >= t.order())
    throw std::invalid_argument("element out of range");
  SubgroupHandle h;
  for (int c = 0; c < t.order(); ++c)
    if (t.product(c, a) == t.product(a, c)) h.members.push_back(c);
  if (!is_subgroup(t, h))
    throw std::logic_error("centralizer failed the closure check");
  return h;
}

std::vector<SubgroupHandle> all_subgroups(const FiniteGroupTable& t) {
  if (t.order() > 256) throw GuardError("all_subgroups: order > 256");
  // Every subgroup arises by extending a smaller one by one element.
  std::set<std::vector<int>> known;
  known.insert({0});
  std::vector<std::vector<int>> work{{0}};
  while (!work.empty()) {
    std::vector<int> h = work.back();
    work.pop_back();
    for (int g = 1; g < t.order(); ++g) {
      if (std::binary_search(h.begin(), h.end(), g)) continue;
      std::vector<int> gens = h;
      gens.push_back(g);
      SubgroupHandle bigger = generated_subgroup(t, gens);
      if (known.insert(bigger.members).second) work.push_back(bigger.members);
    }
  }
  std::vector<SubgroupHandle> out;
  for (const auto& m : known) out.push_back({m});
  return out;
}

std::vector<SubgroupHandle> normal_subgroups_of_index_at_most(
    const FiniteGroupTable& t, int k, const ClassTag& c) {
  std::vector<SubgroupHandle> out;
  for (const auto& h : all_subgroups(t)) {
    int index = t.order() / (int)h.members.size();
    if (index > k) continue;
    if (!c.admits_order(index)) continue;
    if (!is_normal(t, h)) continue;
    out.push_back(h);
  }
  return out;
}

SubgroupHandle fully_characteristic_core(const FiniteGroupTable& t, int k,
                                         const ClassTag& c) {
  std::vector<int> acc;
  for (int x = 0; x < t.order(); ++x) acc.push_back(x);
  for (const auto& h : normal_subgroups_of_index_at_most(t, k, c)) {
    std::vector<int> next;
    std::set_intersection(acc.begin(), acc.end(), h.members.begin(),
                          h.members.end(), std::back_inserter(next));
    acc = std::move(next);
  }
  return {acc};
}

std::vector<int> minimal_generating_set(const FiniteGroupTable& t) {
  std::vector<int> gens;
  SubgroupHandle span = generated_subgroup(t, {});
  for (int g = 1; g < t.order(); ++g) {
    if (std::binary_search(span.members.begin(), span.members.end(), g))
      continue;
    gens.push_back(g);
    span = generated_subgroup(t, gens);
    if ((int)span.members.size() == t.order()) break;
  }
  return gens;
}

namespace {

// Extends a generator assignment to a full map by closing over products,
// then confirms f(xy) = f(x)f(y) on all pairs.  Returns absent if the
// assignment is inconsistent.
std::optional<std::vector<int>> extend_to_endomorphism(
    const FiniteGroupTable& t, const std::vector<int>& gens,
    const std::vector<int>& images) {
  int m = t.order();
  std::vector<int> f(m, -1);
  f[0] = 0;
  std::vector<int> work{0};
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (size_t i = 0; i < gens.size(); ++i) {
      int y = t.product(x, gens[i]);
      int fy = t.product(f[x], images[i]);
      if (f[y] == -1) {
        f[y] = fy;
        work.push_back(y);
      } else if (f[y] != fy) {
        return std::nullopt;
      }
    }
  }
  for (int x = 0; x < m; ++x)
    if (f[x] == -1) return std::nullopt;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (f[t.product(x, y)] != t.product(f[x], f[y])) return std::nullopt;
  return f;
}

bool is_bijection(const std::vector<int>& f) {
  std::vector<bool> seen(f.size(), false);
  for (int x : f) {
    if (seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

std::vector<Endomorphism> enumerate_endomorphisms(const FiniteGroupTable& t) {
  if (t.order() > 16) throw GuardError("enumerate_endomorphisms: order > 16");
  std::vector<int> gens = minimal_generating_set(t);
  int m = t.order();
  std::vector<Endomorphism> out;
  if (gens.empty()) {  // trivial group
    out.push_back({{0}, true});
    return out;
  }
  std::vector<int> images(gens.size(), 0);
  while (true) {
    if (auto f = extend_to_endomorphism(t, gens, images))
      out.push_back({*f, is_bijection(*f)});
    size_t i = 0;
    while (i < images.size() && ++images[i] == m) images[i++] = 0;
    if (i == images.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.image < b.image;
  });
  return out;
}

QuotientResult quotient(const FiniteGroupTable& t, const SubgroupHandle& n) {
  if (!is_subgroup(t, n))
    throw std::invalid_argument("quotient: not a verified subgroup");
  if (!is_normal(t, n))
    throw std::invalid_argument("quotient: subgroup is not normal");
  int m = t.order();
  std::vector<int> coset_of(m, -1);
  std::vector<int> reps;
  for (int x = 0; x < m; ++x) {
    if (coset_of[x] != -1) continue;
    int idx = (int)reps.size();
    reps.push_back(x);
    for (int h : n.members) coset_of[t.product(x, h)] = idx;
  }
  int q = (int)reps.size();
  std::vector<int> table(q * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[i * q + j] = coset_of[t.product(reps[i], reps[j])];
  return {FiniteGroupTable(q, std::move(table)), std::move(coset_of)};
}

SubgroupHandle kp_subgroup(const FiniteGroupTable& t, int p) {
  std::vector<int> gens;
  for (int a = 0; a < t.order(); ++a) {
    gens.push_back(t.power(a, p));
    for (int b = 0; b < t.order(); ++b) {
      int comm = t.product(t.product(a, b),
                           t.product(t.inverse(a), t.inverse(b)));
      gens.push_back(comm);
    }
  }
  return generated_subgroup(t, gens);
}

std::vector<Endomorphism> aut_p(const FiniteGroupTable& t, int p) {
  if (t.order() > 16) throw GuardError("aut_p: order > 16");
  SubgroupHandle kp = kp_subgroup(t, p);
  std::vector<Endomorphism> out;
  for (const auto& f : enumerate_endomorphisms(t)) {
    if (!f.is_automorphism) continue;
    bool trivial_mod_kp = true;
    for (int g = 0; g < t.order() && trivial_mod_kp; ++g) {
      int d = t.product(f(g), t.inverse(g));
      if (!std::binary_search(kp.members.begin(), kp.members.end(), d))
        trivial_mod_kp = false;
    }
    if (trivial_mod_kp) out.push_back(f);
  }
  return out;
}

FiniteGroupTable direct_product_table(const FiniteGroupTable& a,
                                      const FiniteGroupTable& b) {
  int ma = a.order(), mb = b.order();
  std::vector<int> t(ma * mb * ma * mb);
  for (int x1 = 0; x1 < ma; ++x1)
    for (int y1 = 0; y1 < mb; ++y1)
      for (int x2 = 0; x2 < ma; ++x2)
        for (int y2 = 0; y2 < mb; ++y2) {
          int lhs = x1 * mb + y1, rhs = x2 * mb + y2;
          t[lhs * ma * mb + rhs] =
              a.product(x1, x2) * mb + b.product(y1, y2);
        }
  return FiniteGroupTable(ma * mb, std::move(t));
}

FiniteGroupTable cyclic_table(int n) {
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
  return FiniteGroupTable(n, std::move(t));
}

DirectDecomposition decompose_direct_endomorphism(const FiniteGroupTable& a,
                                                  const FiniteGroupTable& b,
                                                  const Endomorphism& f) {
  int ma = a.order(), mb = b.order();
  if ((int)f.image.size() != ma * mb)
    throw std::invalid_argument("map does not match the product table");
  FiniteGroupTable prod = direct_product_table(a, b);
  for (int x = 0; x < ma * mb; ++x)
    for (int y = 0; y < ma * mb; ++y)
      if (f(prod.product(x, y)) != prod.product(f(x), f(y)))
        throw std::invalid_argument(
            "map is not an endomorphism of the product");
  DirectDecomposition d;
  d.alpha.resize(ma);
  d.gamma.resize(ma);
  d.delta.resize(mb);
  d.beta.resize(mb);
  for (int x = 0; x < ma; ++x) {
    int im = f(x * mb);  // image of (x, 1)
    d.alpha[x] = im / mb;
    d.gamma[x] = im % mb;
  }
  for (int y = 0; y < mb; ++y) {
    int im = f(y);  // image of (1, y)
    d.delta[y] = im / mb;
    d.beta[y] = im % mb;
  }
  return d;
}

}  // namespace gp
