#include <doctest.h>

#include "gp/errors.hpp"
#include "gp/io.hpp"

using namespace gp;

namespace {

const char* kF2 = R"(# free group of rank 2 as a RAAG
vertices: 2
edges:
group 0: Z
group 1: Z
)";

const char* kMixed = R"(vertices: 3
edges: 0-1, 1-2
group 0: table [[0,1],[1,0]]
group 1: Z
group 2: table [[0,1,2],[1,2,0],[2,0,1]]
)";

}  // namespace

TEST_CASE("presentation round trip") {
  Presentation p = parse_presentation(kMixed);
  CHECK(p.vertex_count() == 3);
  CHECK(p.graph().adjacent(0, 1));
  CHECK(p.graph().adjacent(1, 2));
  CHECK_FALSE(p.graph().adjacent(0, 2));
  CHECK(p.is_table_vertex(0));
  CHECK_FALSE(p.is_table_vertex(1));
  CHECK(p.group(2).table.order() == 3);
  CHECK(parse_presentation(format_presentation(p)) == p);

  Presentation f2 = parse_presentation(kF2);
  CHECK(parse_presentation(format_presentation(f2)) == f2);
}

TEST_CASE("presentation parse errors carry line numbers") {
  try {
    parse_presentation("vertices: 2\nedges: 0-5\ngroup 0: Z\ngroup 1: Z\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_presentation("vertices: 1\nedges:\ngroup 0: table [[0,1],[1,1]]\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_presentation("vertices: 2\nedges:\ngroup 0: Z\n"),
                  ParseError);
  // trivial vertex groups are rejected
  CHECK_THROWS_AS(
      parse_presentation("vertices: 1\nedges:\ngroup 0: table [[0]]\n"),
      ParseError);
}

TEST_CASE("word round trip") {
  Presentation p = parse_presentation(kMixed);
  Word w = parse_word(p, "0:1 1:-3 2:2");
  CHECK(w.size() == 3);
  CHECK(w[1] == Syllable{1, -3});
  CHECK(format_word(w) == "0:1 1:-3 2:2");
  CHECK(parse_word(p, "").empty());
  CHECK(format_word(NormalForm{}) == "");
  CHECK_THROWS_AS(parse_word(p, "0:2"), ParseError);   // out of range
  CHECK_THROWS_AS(parse_word(p, "1:0"), ParseError);   // identity syllable
  CHECK_THROWS_AS(parse_word(p, "junk"), ParseError);
}

TEST_CASE("map family round trip") {
  Presentation p = parse_presentation(kMixed);
  std::string text =
      "map 0: 1 -> \"1:1 0:1 1:-1\"\n"
      "map 1: gen -> \"1:2\"\n"
      "map 2: 1 -> \"2:2\", 2 -> \"2:1\"\n";
  VertexMapFamily f = parse_map_family(p, text);
  CHECK(f.images[0][0] == reduce(p, parse_word(p, "1:1 0:1 1:-1")));
  CHECK(f.images[1][0] == reduce(p, parse_word(p, "1:2")));
  CHECK(f.images[2][1] == reduce(p, parse_word(p, "2:1")));
  VertexMapFamily again = parse_map_family(p, format_map_family(f));
  CHECK(same_map(f, again));

  CHECK_THROWS_AS(parse_map_family(p, "map 0: 1 -> \"0:1\"\n"), ParseError);
  CHECK_THROWS_AS(
      parse_map_family(p, "map 5: gen -> \"0:1\"\n"), ParseError);
}

TEST_CASE("witness round trip and tamper detection") {
  Presentation r = parse_presentation(kF2);
  NormalForm f = reduce(r, parse_word(r, "0:1 1:1"));
  NormalForm g = reduce(r, parse_word(r, "1:1 0:-1"));
  SeparationOutcome out = separate_conjugacy(r, f, g, ClassTag::all_finite());
  REQUIRE(out.kind == SeparationOutcome::Kind::Witness);
  std::string text = format_witness(*out.witness);
  SeparationWitness parsed = parse_witness(text);
  CHECK(verify_witness(parsed).valid());
  CHECK(format_witness(parsed) == text);

  // corrupt the stated image: verification must fail
  std::string tampered = text;
  auto pos = tampered.find("image-x: ");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 9, "image-x: 0:2 ");
  SeparationWitness bad = parse_witness(tampered);
  CHECK_FALSE(verify_witness(bad).valid());
}

TEST_CASE("witness with p class round trips") {
  Presentation r = parse_presentation(kF2);
  NormalForm f = reduce(r, parse_word(r, "0:2 1:1"));
  NormalForm g = reduce(r, parse_word(r, "0:1 1:2"));
  SeparationOutcome out = separate_conjugacy(r, f, g, ClassTag::p_finite(3));
  REQUIRE(out.kind == SeparationOutcome::Kind::Witness);
  SeparationWitness parsed = parse_witness(format_witness(*out.witness));
  CHECK(parsed.family.class_tag.kind == ClassTag::Kind::PFinite);
  CHECK(parsed.family.class_tag.p == 3);
  CHECK(verify_witness(parsed).valid());
}
