#include "gp/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gp/errors.hpp"

namespace gp {

namespace {

// Cursor over the meaningful lines of a document: comments stripped,
// blanks skipped, 1-based line numbers retained for error messages.
class Lines {
 public:
  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto end = line.find_last_not_of(" \t\r");
      line.erase(end == std::string::npos ? 0 : end + 1);
      if (!line.empty()) entries_.push_back({number, line});
    }
  }

  bool done() const { return pos_ >= entries_.size(); }
  int line_number() const {
    return done() ? (entries_.empty() ? 1 : entries_.back().first + 1)
                  : entries_[pos_].first;
  }
  std::string next() { return entries_[pos_++].second; }

 private:
  std::vector<std::pair<int, std::string>> entries_;
  size_t pos_ = 0;
};

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// Splits "key: rest" and checks the key.
std::string expect_key(Lines& in, const std::string& key) {
  if (in.done()) throw ParseError(in.line_number(), "expected '" + key + ":'");
  int n = in.line_number();
  std::string line = in.next();
  auto colon = line.find(':');
  if (colon == std::string::npos || trimmed(line.substr(0, colon)) != key)
    throw ParseError(n, "expected '" + key + ":', got '" + line + "'");
  return trimmed(line.substr(colon + 1));
}

long long parse_int(const std::string& s, int line) {
  long long value = 0;
  std::string t = trimmed(s);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError(line, "expected an integer, got '" + s + "'");
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Presentation parse_presentation_lines(Lines& in) {
  int vline = in.line_number();
  long long nv = parse_int(expect_key(in, "vertices"), vline);
  if (nv < 0 || nv > 1000) throw ParseError(vline, "bad vertex count");
  SimplicialGraph graph((int)nv);
  int eline = in.line_number();
  std::string edges = expect_key(in, "edges");
  if (!trimmed(edges).empty()) {
    for (const std::string& tok : split(edges, ',')) {
      auto dash = tok.find('-');
      if (dash == std::string::npos)
        throw ParseError(eline, "edge must look like 'u-v'");
      long long u = parse_int(tok.substr(0, dash), eline);
      long long v = parse_int(tok.substr(dash + 1), eline);
      try {
        graph.add_edge((int)u, (int)v);
      } catch (const std::invalid_argument& e) {
        throw ParseError(eline, e.what());
      }
    }
  }
  std::vector<VertexGroupSpec> groups((size_t)nv);
  std::vector<bool> seen((size_t)nv, false);
  for (int i = 0; i < nv; ++i) {
    if (in.done())
      throw ParseError(in.line_number(), "missing 'group V:' line");
    int gline = in.line_number();
    std::string line = in.next();
    auto colon = line.find(':');
    if (colon == std::string::npos || line.rfind("group", 0) != 0)
      throw ParseError(gline, "expected 'group V: ...'");
    long long v = parse_int(line.substr(5, colon - 5), gline);
    if (v < 0 || v >= nv) throw ParseError(gline, "group vertex out of range");
    if (seen[v]) throw ParseError(gline, "duplicate group line");
    seen[v] = true;
    std::string body = trimmed(line.substr(colon + 1));
    if (body == "Z") {
      groups[v] = VertexGroupSpec::infinite_cyclic();
    } else if (body.rfind("table", 0) == 0) {
      std::string json_text = trimmed(body.substr(5));
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(json_text);
      } catch (const nlohmann::json::exception&) {
        throw ParseError(gline, "table is not a valid [[...],[...]] array");
      }
      if (!j.is_array() || j.empty())
        throw ParseError(gline, "table must be a nonempty array of rows");
      int order = (int)j.size();
      std::vector<int> row_major;
      for (const auto& row : j) {
        if (!row.is_array() || (int)row.size() != order)
          throw ParseError(gline, "table rows must all have length " +
                                      std::to_string(order));
        for (const auto& x : row) {
          if (!x.is_number_integer())
            throw ParseError(gline, "table entries must be integers");
          row_major.push_back(x.get<int>());
        }
      }
      ValidityReport r = validate_table(order, row_major);
      if (!r.valid()) throw ParseError(gline, r.violations[0]);
      if (order < 2)
        throw ParseError(gline, "vertex groups must be nontrivial");
      groups[v] =
          VertexGroupSpec::from_table(FiniteGroupTable(order, row_major));
    } else {
      throw ParseError(gline, "group must be 'Z' or 'table [[...]]'");
    }
  }
  return Presentation(std::move(graph), std::move(groups));
}

Syllable parse_syllable(const Presentation& p, const std::string& tok,
                        int line) {
  auto colon = tok.find(':');
  if (colon == std::string::npos)
    throw ParseError(line, "syllable must look like 'v:e', got '" + tok + "'");
  long long v = parse_int(tok.substr(0, colon), line);
  long long e = parse_int(tok.substr(colon + 1), line);
  Syllable s{(int)v, e};
  if (!p.elem_valid(s.vertex, s.elem))
    throw ParseError(line, "syllable '" + tok +
                               "' does not fit the presentation");
  return s;
}

Word parse_word_at(const Presentation& p, const std::string& text, int line) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) w.push_back(parse_syllable(p, tok, line));
  return w;
}

std::string format_syllables(const std::vector<Syllable>& w) {
  std::string out;
  for (const Syllable& s : w) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s.vertex) + ':' + std::to_string(s.elem);
  }
  return out;
}

VertexQuotient parse_quotient_body(const std::string& body, int line) {
  if (body == "identity") return VertexQuotient::identity();
  if (body.rfind("mod", 0) == 0)
    return VertexQuotient::by_modulus(parse_int(body.substr(3), line));
  if (body.rfind("subgroup", 0) == 0) {
    std::string rest = trimmed(body.substr(8));
    if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
      throw ParseError(line, "subgroup must look like '{0,2}'");
    SubgroupHandle h;
    for (const std::string& tok : split(rest.substr(1, rest.size() - 2), ','))
      h.members.push_back((int)parse_int(tok, line));
    std::sort(h.members.begin(), h.members.end());
    return VertexQuotient::by_subgroup(std::move(h));
  }
  throw ParseError(line, "quotient must be 'identity', 'mod N' or "
                         "'subgroup {..}'");
}

std::string format_quotient(const VertexQuotient& q) {
  switch (q.kind) {
    case VertexQuotient::Kind::Identity:
      return "identity";
    case VertexQuotient::Kind::Modulus:
      return "mod " + std::to_string(q.modulus);
    case VertexQuotient::Kind::TableQuotient: {
      std::string out = "subgroup {";
      for (size_t i = 0; i < q.subgroup.members.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(q.subgroup.members[i]);
      }
      return out + "}";
    }
  }
  return "";
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Lines in(text);
  Presentation p = parse_presentation_lines(in);
  if (!in.done())
    throw ParseError(in.line_number(), "unexpected trailing content");
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "vertices: " + std::to_string(p.vertex_count()) + "\n";
  out += "edges:";
  bool first = true;
  for (auto [u, v] : p.graph().edges()) {
    out += first ? " " : ", ";
    out += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  out += "\n";
  for (int v = 0; v < p.vertex_count(); ++v) {
    out += "group " + std::to_string(v) + ": ";
    if (!p.is_table_vertex(v)) {
      out += "Z\n";
      continue;
    }
    const FiniteGroupTable& t = p.group(v).table;
    out += "table [";
    for (int a = 0; a < t.order(); ++a) {
      if (a) out += ',';
      out += '[';
      for (int b = 0; b < t.order(); ++b) {
        if (b) out += ',';
        out += std::to_string(t.product(a, b));
      }
      out += ']';
    }
    out += "]\n";
  }
  return out;
}

Word parse_word(const Presentation& p, const std::string& text) {
  return parse_word_at(p, text, 1);
}

std::string format_word(const Word& w) { return format_syllables(w); }

std::string format_word(const NormalForm& w) {
  return format_syllables(w.syllables);
}

VertexMapFamily parse_map_family(const Presentation& p,
                                 const std::string& text) {
  VertexMapFamily f{p, p, {}};
  f.images.resize(p.vertex_count());
  std::vector<std::vector<bool>> given(p.vertex_count());
  for (int v = 0; v < p.vertex_count(); ++v) {
    int count = p.is_table_vertex(v) ? p.group(v).table.order() - 1 : 1;
    f.images[v].resize(count);
    given[v].assign(count, false);
  }
  Lines in(text);
  while (!in.done()) {
    int line = in.line_number();
    std::string s = in.next();
    if (s.rfind("map", 0) != 0) throw ParseError(line, "expected 'map V: ...'");
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError(line, "missing ':'");
    long long v = parse_int(s.substr(3, colon - 3), line);
    if (v < 0 || v >= p.vertex_count())
      throw ParseError(line, "map vertex out of range");
    // entries look like:  e -> "word", e -> "word"  (or gen -> "word")
    std::string rest = s.substr(colon + 1);
    size_t pos = 0;
    while (true) {
      auto arrow = rest.find("->", pos);
      if (arrow == std::string::npos) {
        if (trimmed(rest.substr(pos)).empty()) break;
        throw ParseError(line, "expected 'e -> \"word\"'");
      }
      std::string lhs = trimmed(rest.substr(pos, arrow - pos));
      if (!lhs.empty() && lhs.front() == ',') lhs = trimmed(lhs.substr(1));
      auto q1 = rest.find('"', arrow);
      if (q1 == std::string::npos) throw ParseError(line, "missing '\"'");
      auto q2 = rest.find('"', q1 + 1);
      if (q2 == std::string::npos)
        throw ParseError(line, "unterminated quoted word");
      std::string word_text = rest.substr(q1 + 1, q2 - q1 - 1);
      int slot;
      if (p.is_table_vertex(v)) {
        long long e = parse_int(lhs, line);
        if (e < 1 || e >= p.group(v).table.order())
          throw ParseError(line, "element index out of range");
        slot = (int)e - 1;
      } else {
        if (lhs != "gen")
          throw ParseError(line, "Z vertices take 'gen -> \"word\"'");
        slot = 0;
      }
      if (given[v][slot]) throw ParseError(line, "duplicate image for element");
      given[v][slot] = true;
      f.images[v][slot] = reduce(p, parse_word_at(p, word_text, line));
      pos = q2 + 1;
    }
  }
  for (int v = 0; v < p.vertex_count(); ++v)
    for (size_t i = 0; i < given[v].size(); ++i)
      if (!given[v][i])
        throw ParseError(
            1, "missing image for element " + std::to_string(i + 1) +
                   " of vertex " + std::to_string(v));
  return f;
}

std::string format_map_family(const VertexMapFamily& f) {
  std::string out;
  for (int v = 0; v < f.source.vertex_count(); ++v) {
    out += "map " + std::to_string(v) + ": ";
    if (f.source.is_table_vertex(v)) {
      for (size_t i = 0; i < f.images[v].size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(i + 1) + " -> \"" +
               format_word(f.images[v][i]) + "\"";
      }
    } else {
      out += "gen -> \"" + format_word(f.images[v][0]) + "\"";
    }
    out += "\n";
  }
  return out;
}

SeparationWitness parse_witness(const std::string& text) {
  Lines in(text);
  SeparationWitness w;
  int line = in.line_number();
  std::string kind = expect_key(in, "witness-kind");
  if (kind == "inequality")
    w.kind = SeparationWitness::Kind::Inequality;
  else if (kind == "nonconjugacy")
    w.kind = SeparationWitness::Kind::NonConjugacy;
  else
    throw ParseError(line, "witness-kind must be inequality or nonconjugacy");
  line = in.line_number();
  std::string cls = expect_key(in, "class");
  if (cls == "all") {
    w.family.class_tag = ClassTag::all_finite();
  } else if (cls.rfind("p", 0) == 0) {
    w.family.class_tag = ClassTag::p_finite((int)parse_int(cls.substr(1), line));
  } else {
    throw ParseError(line, "class must be 'all' or 'p N'");
  }
  w.escalations = (int)parse_int(expect_key(in, "escalations"), line);
  w.family.source = parse_presentation_lines(in);
  const Presentation& p = w.family.source;
  for (int v = 0; v < p.vertex_count(); ++v) {
    line = in.line_number();
    std::string body = expect_key(in, "quotient " + std::to_string(v));
    w.family.quotients.push_back(parse_quotient_body(body, line));
  }
  line = in.line_number();
  w.source_x = reduce(p, parse_word_at(p, expect_key(in, "x"), line));
  line = in.line_number();
  w.source_y = reduce(p, parse_word_at(p, expect_key(in, "y"), line));
  // images live in the quotient presentation
  InducedQuotient iq = induced_quotient_presentation(w.family);
  line = in.line_number();
  w.image_x =
      reduce(iq.presentation,
             parse_word_at(iq.presentation, expect_key(in, "image-x"), line));
  line = in.line_number();
  w.image_y =
      reduce(iq.presentation,
             parse_word_at(iq.presentation, expect_key(in, "image-y"), line));
  if (!in.done())
    throw ParseError(in.line_number(), "unexpected trailing content");
  return w;
}

std::string format_witness(const SeparationWitness& w) {
  std::string out;
  out += "witness-kind: ";
  out += w.kind == SeparationWitness::Kind::Inequality ? "inequality"
                                                       : "nonconjugacy";
  out += "\n";
  out += "class: ";
  if (w.family.class_tag.kind == ClassTag::Kind::AllFinite)
    out += "all";
  else
    out += "p" + std::to_string(w.family.class_tag.p);
  out += "\n";
  out += "escalations: " + std::to_string(w.escalations) + "\n";
  out += format_presentation(w.family.source);
  for (size_t v = 0; v < w.family.quotients.size(); ++v)
    out += "quotient " + std::to_string(v) + ": " +
           format_quotient(w.family.quotients[v]) + "\n";
  out += "x: " + format_word(w.source_x) + "\n";
  out += "y: " + format_word(w.source_y) + "\n";
  out += "image-x: " + format_word(w.image_x) + "\n";
  out += "image-y: " + format_word(w.image_y) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace gp
