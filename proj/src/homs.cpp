#include "gp/homs.hpp"

#include <algorithm>
#include <stdexcept>

#include "gp/errors.hpp"

namespace gp {

namespace {

int expected_datum_count(const Presentation& p, int v) {
  return p.is_table_vertex(v) ? p.group(v).table.order() - 1 : 1;
}

void check_shape(const VertexMapFamily& f) {
  if ((int)f.images.size() != f.source.vertex_count())
    throw std::invalid_argument("map family: one image list per vertex");
  for (int v = 0; v < f.source.vertex_count(); ++v)
    if ((int)f.images[v].size() != expected_datum_count(f.source, v))
      throw std::invalid_argument("map family: wrong image count at vertex " +
                                  std::to_string(v));
}

}  // namespace

const NormalForm& VertexMapFamily::image_of(int v,
                                            std::int64_t nonzero_elem) const {
  if (source.is_table_vertex(v)) return images.at(v).at(nonzero_elem - 1);
  return images.at(v).at(0);
}

ValidityReport validate_family(const VertexMapFamily& f) {
  check_shape(f);
  ValidityReport r;
  const Presentation& src = f.source;
  const Presentation& tgt = f.target;
  for (int v = 0; v < src.vertex_count(); ++v) {
    if (!src.is_table_vertex(v)) continue;
    const FiniteGroupTable& t = src.group(v).table;
    auto image = [&](int e) -> NormalForm {
      return e == 0 ? NormalForm{} : f.image_of(v, e);
    };
    for (int a = 1; a < t.order(); ++a)
      for (int b = 1; b < t.order(); ++b) {
        NormalForm lhs = multiply(tgt, image(a), image(b));
        if (lhs != image(t.product(a, b))) {
          r.violations.push_back("vertex " + std::to_string(v) +
                                 ": images break relation " +
                                 std::to_string(a) + "*" + std::to_string(b));
          break;
        }
      }
  }
  for (auto [u, v] : src.graph().edges()) {
    for (int i = 0; i < expected_datum_count(src, u); ++i)
      for (int j = 0; j < expected_datum_count(src, v); ++j) {
        const NormalForm& a = f.images[u][i];
        const NormalForm& b = f.images[v][j];
        if (multiply(tgt, a, b) != multiply(tgt, b, a)) {
          r.violations.push_back("edge {" + std::to_string(u) + "," +
                                 std::to_string(v) +
                                 "}: images do not commute");
          goto next_edge;
        }
      }
  next_edge:;
  }
  return r;
}

NormalForm apply(const VertexMapFamily& f, const NormalForm& g) {
  NormalForm out;
  for (const Syllable& s : g.syllables) {
    NormalForm piece = f.source.is_table_vertex(s.vertex)
                           ? f.image_of(s.vertex, s.elem)
                           : power(f.target, f.image_of(s.vertex, 1), s.elem);
    out = multiply(f.target, out, piece);
  }
  return out;
}

VertexMapFamily identity_family(const Presentation& p) {
  VertexMapFamily f{p, p, {}};
  f.images.resize(p.vertex_count());
  for (int v = 0; v < p.vertex_count(); ++v) {
    if (p.is_table_vertex(v)) {
      for (int e = 1; e < p.group(v).table.order(); ++e)
        f.images[v].push_back(single_syllable(p, {v, e}));
    } else {
      f.images[v].push_back(single_syllable(p, {v, 1}));
    }
  }
  return f;
}

VertexMapFamily inner(const Presentation& p, const NormalForm& w) {
  VertexMapFamily f = identity_family(p);
  for (auto& per_vertex : f.images)
    for (auto& img : per_vertex) img = conjugate_by(p, w, img);
  return f;
}

VertexMapFamily compose(const VertexMapFamily& f, const VertexMapFamily& g) {
  if (!(g.target == f.source))
    throw std::invalid_argument("compose: target/source mismatch");
  VertexMapFamily out{g.source, f.target, g.images};
  for (auto& per_vertex : out.images)
    for (auto& img : per_vertex) img = apply(f, img);
  return out;
}

bool same_map(const VertexMapFamily& f, const VertexMapFamily& g) {
  return f.source == g.source && f.target == g.target && f.images == g.images;
}

std::optional<std::pair<NormalForm, Syllable>> minimal_conjugator_to_vertex(
    const Presentation& p, const NormalForm& x, int v) {
  CyclicReduction cr = cyclic_reduction(p, x);
  if (cr.core.length() != 1 || cr.core.syllables[0].vertex != v)
    return std::nullopt;
  VertexSet star_v = star(p.graph(), v);
  NormalForm w = cr.conjugator;
  Word suffix;  // collected in reverse
  while (true) {
    VertexSet trimmable =
        set_intersection(last_vertices(p.graph(), w), star_v);
    if (trimmable.empty()) break;
    int t = trimmable[0];
    // extract the end-reachable t-syllable
    auto& syls = w.syllables;
    size_t pos = syls.size();
    for (size_t i = syls.size(); i-- > 0;) {
      if (syls[i].vertex == t) {
        pos = i;
        break;
      }
    }
    suffix.push_back(syls[pos]);
    syls.erase(syls.begin() + pos);
    w = reduce(p, syls);
  }
  std::reverse(suffix.begin(), suffix.end());
  // b' = z_v b z_v^-1 where z_v is the v-component of the trimmed suffix
  std::int64_t zv = 0;
  bool have_zv = false;
  for (const Syllable& s : suffix)
    if (s.vertex == v) {
      zv = have_zv ? p.elem_mul(v, zv, s.elem) : s.elem;
      have_zv = true;
    }
  std::int64_t b = cr.core.syllables[0].elem;
  if (have_zv)
    b = p.elem_mul(v, p.elem_mul(v, zv, b), p.elem_inv(v, zv));
  Syllable core{v, b};
  if (conjugate_by(p, w, single_syllable(p, core)) != x)
    throw std::logic_error("minimal_conjugator_to_vertex: verification failed");
  return std::make_pair(w, core);
}

VertexSet stabilized_vertices(const VertexMapFamily& f) {
  VertexSet out;
  for (int v = 0; v < f.source.vertex_count(); ++v) {
    bool stays = true;
    for (const NormalForm& img : f.images[v])
      if (!set_subset(support(img), VertexSet{v})) stays = false;
    if (stays) out.push_back(v);
  }
  return out;
}

namespace {

// All elements of length <= 2 over the source, in canonical order;
// infinite cyclic exponents bounded.
std::vector<NormalForm> short_elements(const Presentation& p, int exp_bound) {
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
  std::set<NormalForm> len1, len2;
  for (const Syllable& s : alphabet) len1.insert(single_syllable(p, s));
  for (const Syllable& s : alphabet)
    for (const Syllable& t : alphabet) {
      if (s.vertex == t.vertex) continue;
      len2.insert(multiply(p, single_syllable(p, s), single_syllable(p, t)));
    }
  std::vector<NormalForm> out(len1.begin(), len1.end());
  out.insert(out.end(), len2.begin(), len2.end());
  return out;
}

void require_valid(const VertexMapFamily& f) {
  ValidityReport r = validate_family(f);
  if (!r.valid())
    throw std::invalid_argument("invalid map family: " + r.violations[0]);
}

}  // namespace

PointwiseInnerCheck pointwise_inner_up_to_length2(const VertexMapFamily& f,
                                                  int exp_bound) {
  require_valid(f);
  if (exp_bound < 1)
    throw std::invalid_argument("exp_bound must be at least 1");
  if (!(f.source == f.target))
    throw std::invalid_argument("pointwise-inner check needs an endomorphism");
  PointwiseInnerCheck result;
  result.bounded = f.source.has_infinite_vertex();
  for (const NormalForm& g : short_elements(f.source, exp_bound)) {
    if (!are_conjugate(f.source, apply(f, g), g).conjugate) {
      result.witness = g;
      return result;
    }
  }
  return result;
}

InnerDecision decide_inner(const VertexMapFamily& f, int exp_bound) {
  require_valid(f);
  if (!(f.source == f.target))
    throw std::invalid_argument("decide_inner needs an endomorphism");
  const Presentation& p = f.source;
  std::vector<VertexSet> coneless = minimal_coneless_subsets(p.graph());
  if (coneless.empty())
    throw std::invalid_argument(
        "decide_inner: graph has a central vertex, no coneless subset");
  const VertexSet& u_set = coneless[0];

  // Step 0: length <= 2 conjugacy check.
  PointwiseInnerCheck pw = pointwise_inner_up_to_length2(f, exp_bound);
  if (pw.witness) {
    if (are_conjugate(p, apply(f, *pw.witness), *pw.witness).conjugate)
      throw std::logic_error("decide_inner: witness failed re-verification");
    return {InnerDecision::Verdict::NotInner, {}, *pw.witness};
  }

  // Step 1: stabilize the coneless subset, least vertex first.
  VertexMapFamily psi = f;
  NormalForm conj;  // f = inner(conj) composed with psi
  while (true) {
    VertexSet stabilized = set_intersection(stabilized_vertices(psi), u_set);
    VertexSet todo = set_difference(u_set, stabilized);
    if (todo.empty()) break;
    int v = todo[0];
    NormalForm b = single_syllable(p, {v, 1});
    auto mc = minimal_conjugator_to_vertex(p, apply(psi, b), v);
    if (!mc)
      throw std::logic_error(
          "decide_inner: image not conjugate into its vertex group");
    psi = compose(inner(p, invert(p, mc->first)), psi);
    conj = multiply(p, conj, mc->first);
    VertexSet now = set_intersection(stabilized_vertices(psi), u_set);
    if (!set_subset(stabilized, now) || now.size() <= stabilized.size())
      throw std::logic_error("decide_inner: stabilized subset did not grow");
  }

  // Step 2: psi must now be the identity on every generator.
  VertexMapFamily id = identity_family(p);
  if (same_map(psi, id)) {
    VertexMapFamily check = inner(p, conj);
    if (!same_map(check, f))
      throw std::logic_error("decide_inner: round-trip verification failed");
    return {InnerDecision::Verdict::Inner, conj, {}};
  }
  for (int v = 0; v < p.vertex_count(); ++v) {
    for (size_t i = 0; i < psi.images[v].size(); ++i) {
      if (psi.images[v][i] == id.images[v][i]) continue;
      std::int64_t e = p.is_table_vertex(v) ? (std::int64_t)i + 1 : 1;
      NormalForm g = single_syllable(p, {v, e});
      if (!are_conjugate(p, apply(f, g), g).conjugate)
        return {InnerDecision::Verdict::NotInner, {}, g};
    }
  }
  if (p.has_infinite_vertex())
    return {InnerDecision::Verdict::BoundedOnly, {}, {}};
  throw std::logic_error(
      "decide_inner: stabilization failed on an exhaustively checked map");
}

}  // namespace gp
