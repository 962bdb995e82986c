#include "gp/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "gp/errors.hpp"

namespace gp {

namespace {

void check_syllable(const Presentation& p, const Syllable& s) {
  if (!p.elem_valid(s.vertex, s.elem))
    throw std::invalid_argument("syllable does not fit the presentation");
}

// Appends one nontrivial syllable to a reduced word, maintaining
// reducedness.
void insert_syllable(const Presentation& p, std::vector<Syllable>& w,
                     Syllable s) {
  const auto& graph = p.graph();
  for (size_t j = w.size(); j-- > 0;) {
    if (w[j].vertex == s.vertex) {
      std::int64_t merged = p.elem_mul(s.vertex, w[j].elem, s.elem);
      if (merged == 0)
        w.erase(w.begin() + j);  // T2 then T1
      else
        w[j].elem = merged;  // T2
      return;
    }
    if (!graph.adjacent(w[j].vertex, s.vertex)) break;  // no T3 past here
  }
  w.push_back(s);
}

// Greedy lexicographically least linearization of the trace.  At each
// step the candidates are the syllables all of whose unpicked
// predecessors commute with them; candidates always have pairwise
// distinct vertices.
std::vector<Syllable> canonicalize(const Presentation& p,
                                   std::vector<Syllable> w) {
  const auto& graph = p.graph();
  std::vector<Syllable> out;
  out.reserve(w.size());
  while (!w.empty()) {
    size_t best = w.size();
    for (size_t i = 0; i < w.size(); ++i) {
      bool available = true;
      for (size_t j = 0; j < i && available; ++j)
        if (!graph.adjacent(w[j].vertex, w[i].vertex)) available = false;
      if (available && (best == w.size() || w[i] < w[best])) best = i;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + best);
  }
  return out;
}

}  // namespace

NormalForm single_syllable(const Presentation& p, const Syllable& s) {
  check_syllable(p, s);
  return {{s}};
}

NormalForm reduce(const Presentation& p, const Word& w) {
  std::vector<Syllable> acc;
  acc.reserve(w.size());
  for (const Syllable& s : w) {
    check_syllable(p, s);
    insert_syllable(p, acc, s);
  }
  return {canonicalize(p, std::move(acc))};
}

bool is_canonical(const Presentation& p, const Word& w) {
  NormalForm again = reduce(p, w);
  return again.syllables == w;
}

NormalForm multiply(const Presentation& p, const NormalForm& g,
                    const NormalForm& h) {
  for (const Syllable& s : g.syllables) check_syllable(p, s);
  std::vector<Syllable> acc = g.syllables;
  for (const Syllable& s : h.syllables) {
    check_syllable(p, s);
    insert_syllable(p, acc, s);
  }
  return {canonicalize(p, std::move(acc))};
}

NormalForm invert(const Presentation& p, const NormalForm& g) {
  Word w;
  w.reserve(g.syllables.size());
  for (auto it = g.syllables.rbegin(); it != g.syllables.rend(); ++it)
    w.push_back({it->vertex, p.elem_inv(it->vertex, it->elem)});
  return reduce(p, w);
}

NormalForm conjugate_by(const Presentation& p, const NormalForm& w,
                        const NormalForm& g) {
  return multiply(p, multiply(p, w, g), invert(p, w));
}

NormalForm power(const Presentation& p, const NormalForm& g, std::int64_t n) {
  if (n < 0) return power(p, invert(p, g), -n);
  NormalForm acc;
  NormalForm base = g;
  while (n > 0) {
    if (n & 1) acc = multiply(p, acc, base);
    base = multiply(p, base, base);
    n >>= 1;
  }
  return acc;
}

VertexSet support(const NormalForm& g) {
  VertexSet out;
  for (const Syllable& s : g.syllables) out.push_back(s.vertex);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet first_vertices(const SimplicialGraph& graph, const NormalForm& g) {
  VertexSet out;
  const auto& w = g.syllables;
  for (size_t i = 0; i < w.size(); ++i) {
    bool reachable = true;
    for (size_t j = 0; j < i && reachable; ++j)
      if (!graph.adjacent(w[j].vertex, w[i].vertex)) reachable = false;
    if (reachable) out.push_back(w[i].vertex);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet last_vertices(const SimplicialGraph& graph, const NormalForm& g) {
  VertexSet out;
  const auto& w = g.syllables;
  for (size_t i = 0; i < w.size(); ++i) {
    bool reachable = true;
    for (size_t j = i + 1; j < w.size() && reachable; ++j)
      if (!graph.adjacent(w[j].vertex, w[i].vertex)) reachable = false;
    if (reachable) out.push_back(w[i].vertex);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NormalForm retract(const Presentation& p, const VertexSet& x,
                   const NormalForm& g) {
  Word kept;
  for (const Syllable& s : g.syllables)
    if (set_contains(x, s.vertex)) kept.push_back(s);
  return reduce(p, kept);
}

std::set<std::vector<Syllable>> shuffle_closure(const Presentation& p,
                                                const NormalForm& g) {
  if (g.length() > 10) throw GuardError("shuffle_closure: word too long");
  const auto& graph = p.graph();
  std::set<std::vector<Syllable>> seen;
  std::vector<std::vector<Syllable>> work{g.syllables};
  seen.insert(g.syllables);
  while (!work.empty()) {
    std::vector<Syllable> w = work.back();
    work.pop_back();
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (!graph.adjacent(w[i].vertex, w[i + 1].vertex)) continue;
      std::swap(w[i], w[i + 1]);
      if (seen.insert(w).second) {
        if (seen.size() > 100000)
          throw GuardError("shuffle_closure: closure too large");
        work.push_back(w);
      }
      std::swap(w[i], w[i + 1]);
    }
  }
  return seen;
}

}  // namespace gp
