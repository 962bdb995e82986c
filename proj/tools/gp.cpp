// Command-line surface for the graph-product toolkit.
//
// Exit codes: 0 positive verdict, 1 negative verdict, 2 input or
// structural error, 3 bounded or unknown outcome.  All result payloads go
// to stdout and are byte-deterministic; diagnostics go to stderr.

#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gp/errors.hpp"
#include "gp/io.hpp"

namespace {

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kBounded = 3;

gp::Presentation load_presentation(const std::string& path) {
  return gp::parse_presentation(gp::read_file(path));
}

gp::ClassTag parse_class(const std::string& s) {
  if (s == "all") return gp::ClassTag::all_finite();
  if (s.size() > 1 && s[0] == 'p')
    return gp::ClassTag::p_finite(std::stoi(s.substr(1)));
  throw std::invalid_argument("--class must be 'all' or 'p<prime>'");
}

int cmd_reduce(const std::string& pres_path, const std::string& word) {
  gp::Presentation p = load_presentation(pres_path);
  gp::NormalForm nf = gp::reduce(p, gp::parse_word(p, word));
  std::cout << gp::format_word(nf) << "\n";
  return kPositive;
}

int cmd_conj(const std::string& pres_path, const std::string& xs,
             const std::string& ys, int oracle_len, int exp_bound) {
  gp::Presentation p = load_presentation(pres_path);
  gp::NormalForm x = gp::reduce(p, gp::parse_word(p, xs));
  gp::NormalForm y = gp::reduce(p, gp::parse_word(p, ys));
  gp::ConjugacyAnswer ans = gp::are_conjugate(p, x, y);
  std::string suffix;
  if (oracle_len > 0) {
    auto found = gp::conjugacy_oracle(p, x, y, oracle_len, exp_bound);
    bool agree = true;
    if (found.has_value() && !ans.conjugate) agree = false;
    // A positive criterion answer with a conjugator inside the search
    // bound must also be visible to the oracle.
    if (!found.has_value() && ans.conjugate &&
        ans.conjugator->length() <= oracle_len)
      agree = false;
    suffix = agree ? " [oracle: agree]" : " [oracle: DISAGREE]";
  }
  if (ans.conjugate) {
    std::cout << "CONJUGATE " << gp::format_word(*ans.conjugator) << suffix
              << "\n";
    return kPositive;
  }
  std::cout << "NOT_CONJUGATE" << suffix << "\n";
  return kNegative;
}

int cmd_decide_inner(const std::string& pres_path, const std::string& map_path,
                     int exp_bound) {
  gp::Presentation p = load_presentation(pres_path);
  gp::VertexMapFamily f = gp::parse_map_family(p, gp::read_file(map_path));
  if (gp::minimal_coneless_subsets(p.graph()).empty()) {
    std::cerr << "error: the graph has a central vertex, hence no coneless "
                 "subset; split off the central factors first\n";
    return kInputError;
  }
  gp::InnerDecision d = gp::decide_inner(f, exp_bound);
  switch (d.verdict) {
    case gp::InnerDecision::Verdict::Inner:
      std::cout << "INNER " << gp::format_word(d.conjugator) << "\n";
      return kPositive;
    case gp::InnerDecision::Verdict::NotInner:
      std::cout << "NOT_INNER " << gp::format_word(d.witness) << "\n";
      return kNegative;
    case gp::InnerDecision::Verdict::BoundedOnly:
      std::cout << "BOUNDED_ONLY\n";
      return kBounded;
  }
  return kInputError;
}

std::string format_sets(const std::vector<gp::VertexSet>& sets) {
  if (sets.empty()) return "none";
  std::string out;
  for (size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ",";
    out += "{";
    for (size_t j = 0; j < sets[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(sets[i][j]);
    }
    out += "}";
  }
  return out;
}

int cmd_analyze(const std::string& pres_path) {
  gp::Presentation p = load_presentation(pres_path);
  const gp::SimplicialGraph& g = p.graph();
  gp::VertexSet central = gp::central_vertices(g);
  std::string central_text;
  if (central.empty()) {
    central_text = "none";
  } else {
    for (size_t i = 0; i < central.size(); ++i) {
      if (i) central_text += ",";
      central_text += std::to_string(central[i]);
    }
  }
  std::cout << "central: " << central_text
            << "; coneless: " << format_sets(gp::minimal_coneless_subsets(g))
            << "; components: " << format_sets(gp::irreducible_components(g))
            << "\n";
  return kPositive;
}

int cmd_separate(const std::string& pres_path, const std::string& xs,
                 const std::string& ys, const std::string& class_text,
                 const std::string& out_path) {
  gp::Presentation p = load_presentation(pres_path);
  gp::NormalForm x = gp::reduce(p, gp::parse_word(p, xs));
  gp::NormalForm y = gp::reduce(p, gp::parse_word(p, ys));
  gp::SeparationOutcome out =
      gp::separate_conjugacy(p, x, y, parse_class(class_text));
  switch (out.kind) {
    case gp::SeparationOutcome::Kind::Witness: {
      std::string text = gp::format_witness(*out.witness);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
          std::cerr << "error: cannot write " << out_path << "\n";
          return kInputError;
        }
        file << text;
        std::cout << "WITNESS " << out_path << "\n";
      }
      return kPositive;
    }
    case gp::SeparationOutcome::Kind::AlreadyConjugate:
      std::cout << "ALREADY_CONJUGATE " << gp::format_word(out.conjugator)
                << "\n";
      return kNegative;
    case gp::SeparationOutcome::Kind::Unknown:
      std::cout << "UNKNOWN\n";
      return kBounded;
  }
  return kInputError;
}

int cmd_verify_witness(const std::string& path) {
  gp::SeparationWitness w = gp::parse_witness(gp::read_file(path));
  gp::ValidityReport r = gp::verify_witness(w);
  if (r.valid()) {
    std::cout << "WITNESS_OK\n";
    return kPositive;
  }
  std::cout << "WITNESS_INVALID " << r.violations[0] << "\n";
  return kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in graph products of groups"};
  app.require_subcommand(1);

  std::string pres_path, word, xs, ys, map_path, witness_path;
  std::string class_text = "all", out_path;
  int oracle_len = 0, exp_bound = 8;
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose,
               "echo the command and timing to stderr");

  auto* reduce = app.add_subcommand("reduce", "canonical normal form");
  reduce->add_option("-p,--presentation", pres_path)->required();
  reduce->add_option("word", word, "word as 'v:e v:e ...'");

  auto* conj = app.add_subcommand("conj", "decide conjugacy");
  conj->add_option("-p,--presentation", pres_path)->required();
  conj->add_option("x", xs)->required();
  conj->add_option("y", ys)->required();
  conj->add_option("--oracle", oracle_len,
                   "cross-check with brute force up to this conjugator "
                   "length");
  conj->add_option("--exp-bound", exp_bound);

  auto* inner = app.add_subcommand("decide-inner",
                                   "is the map an inner automorphism?");
  inner->add_option("-p,--presentation", pres_path)->required();
  inner->add_option("-m,--map", map_path)->required();
  inner->add_option("--exp-bound", exp_bound);

  auto* analyze = app.add_subcommand("analyze", "graph combinatorics report");
  analyze->add_option("-p,--presentation", pres_path)->required();

  auto* separate =
      app.add_subcommand("separate", "finite-quotient non-conjugacy witness");
  separate->add_option("-p,--presentation", pres_path)->required();
  separate->add_option("x", xs)->required();
  separate->add_option("y", ys)->required();
  separate->add_option("--class", class_text, "'all' or 'p<prime>'");
  separate->add_option("-o,--output", out_path, "write the witness here");

  auto* verify = app.add_subcommand("verify-witness",
                                    "re-run all checks of a witness file");
  verify->add_option("witness", witness_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPositive : kInputError;
  }

  if (verbose) {
    std::cerr << "# cmd:";
    for (int i = 0; i < argc; ++i) std::cerr << " " << argv[i];
    std::cerr << "\n";
  }
  auto started = std::chrono::steady_clock::now();
  int code = kInputError;
  try {
    if (app.got_subcommand(reduce)) code = cmd_reduce(pres_path, word);
    else if (app.got_subcommand(conj))
      code = cmd_conj(pres_path, xs, ys, oracle_len, exp_bound);
    else if (app.got_subcommand(inner))
      code = cmd_decide_inner(pres_path, map_path, exp_bound);
    else if (app.got_subcommand(analyze)) code = cmd_analyze(pres_path);
    else if (app.got_subcommand(separate))
      code = cmd_separate(pres_path, xs, ys, class_text, out_path);
    else if (app.got_subcommand(verify))
      code = cmd_verify_witness(witness_path);
  } catch (const gp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    code = kInputError;
  } catch (const gp::GuardError& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    code = kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kInputError;
  }
  if (verbose) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::cerr << "# exit: " << code << ", elapsed: " << ms << " ms\n";
  }
  return code;
}
