// morgan-kit: command-line front end.
//
// Exit status: 0 success (derivable / valid), 1 negative verdict,
// 2 bad input, 3 an internal check failed.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "morgan/algebra.hpp"
#include "morgan/corpus.hpp"
#include "morgan/interpolation.hpp"
#include "morgan/json_io.hpp"
#include "morgan/prover.hpp"
#include "morgan/render.hpp"
#include "morgan/syntax.hpp"
#include "morgan/translations.hpp"

using namespace morgan;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;
constexpr int kCheckFailed = 3;

struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string calculus = "g3sdm";
  std::string variety = "sdm";
  std::string format = "ascii";
  std::string map = "f";
  std::string kind;
  std::string registry = "k-registry.json";
  std::optional<std::size_t> height;
  std::uint64_t seed = 1;
  std::size_t max_size = 4;
  std::size_t count = 100;
  std::optional<std::uint64_t> max_weight;
  bool derivable_only = false;
  bool batch = false;
  std::string input;
};

// Inline text, or the contents of a file when prefixed with '@'.
std::string read_input(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw std::invalid_argument("cannot open " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> input_lines(const Options& o) {
  std::vector<std::string> lines;
  std::string line;
  if (o.input.empty() || o.input == "-") {
    while (std::getline(std::cin, line))
      if (!line.empty()) lines.push_back(line);
    return lines;
  }
  std::istringstream in(read_input(o.input));
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

// ---- prove / decide -----------------------------------------------------

std::optional<Derivation> search(const Options& o, Calculus c, const Sequent& s) {
  if (!o.height) return derive(c, s);
  Prover p(c);
  auto d = p.derive_min_height(s);
  if (d && (*d)->height > *o.height) return std::nullopt;
  return d;
}

std::string render_checked(const Derivation& d, ProofFormat f) {
  auto r = check_derivation(d->sequent.calculus(), d);
  if (!r.ok) throw InternalError("derivation failed replay: " + r.diagnostic);
  return render(d, f);
}

int prove_one(const Options& o, const std::string& text, bool decide_only, json* row) {
  Calculus c = calculus_from_name(o.calculus);
  Sequent s = parse_sequent(trim(text), c);
  if (decide_only) {
    bool d = o.height ? derivable_within_height(c, s, *o.height) : derivable(c, s);
    if (row) {
      *row = {{"input", text}, {"derivable", d}};
    } else {
      std::cout << (d ? "DERIVABLE" : "NOT DERIVABLE") << "\n";
    }
    return d ? kOk : kNegative;
  }
  auto d = search(o, c, s);
  if (row) {
    *row = {{"input", text}, {"derivable", d.has_value()}};
    if (d) {
      render_checked(*d, ProofFormat::json);
      (*row)["height"] = (*d)->height;
      (*row)["proof"] = proof_to_json(*d);
    }
  } else if (d) {
    std::cout << render_checked(*d, proof_format_from_name(o.format));
    if (proof_format_from_name(o.format) == ProofFormat::json) std::cout << "\n";
  } else {
    std::cout << "NOT DERIVABLE\n";
  }
  return d ? kOk : kNegative;
}

// JSON-lines: one result object per input line, in input order.
int batch(const Options& o, bool decide_only) {
  int worst = kOk;
  for (const auto& line : input_lines(o)) {
    json row;
    try {
      prove_one(o, line, decide_only, &row);
    } catch (const ParseError& e) {
      row = {{"input", line}, {"error", e.what()}, {"position", e.position()}};
      worst = std::max(worst, kBadInput);
    } catch (const InternalError& e) {
      row = {{"input", line}, {"error", e.what()}};
      worst = kCheckFailed;
    } catch (const std::invalid_argument& e) {
      row = {{"input", line}, {"error", e.what()}};
      worst = std::max(worst, kBadInput);
    }
    std::cout << row.dump() << "\n";
  }
  return worst;
}

// ---- interpolate ----------------------------------------------------------

int interpolate_cmd(const Options& o) {
  Calculus c = calculus_from_name(o.calculus);
  if (c != Calculus::sdm && c != Calculus::dm)
    throw std::invalid_argument("interpolation is defined for g3sdm and g3dm");
  SplitSequent split = parse_split_sequent(trim(read_input(o.input)), c);
  Partition part{split.left, split.right, split.succedent};
  Sequent goal = partition_goal(c, part);
  auto d = derive(c, goal);
  if (!d) {
    std::cout << "NOT DERIVABLE\n";
    return kNegative;
  }
  InterpolationResult r;
  try {
    r = interpolate(c, *d, part);
  } catch (const std::logic_error& e) {
    throw InternalError(e.what());
  }
  if (!verify_interpolant(c, goal, part, r.interpolant))
    throw InternalError("interpolant failed verification: " + print_structure(r.interpolant));
  ProofFormat f = proof_format_from_name(o.format);
  if (f == ProofFormat::json) {
    json out = {{"interpolant", to_json(r.interpolant)},
                {"text", print_structure(r.interpolant)},
                {"left", proof_to_json(r.left_derivation)},
                {"right", proof_to_json(r.right_derivation)}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "interpolant: " << print_structure(r.interpolant) << "\n\n";
  std::cout << "left obligation: " << print_sequent(r.left_derivation->sequent) << "\n";
  std::cout << render_checked(r.left_derivation, f) << "\n";
  std::cout << "right obligation: " << print_sequent(r.right_derivation->sequent) << "\n";
  std::cout << render_checked(r.right_derivation, f);
  return kOk;
}

// ---- translate ------------------------------------------------------------

int translate_cmd(const Options& o) {
  ClassRegistry reg;
  if (o.map == "k") {
    std::ifstream in(o.registry);
    if (in) reg = ClassRegistry::from_json(json::parse(in));
  }
  std::cout << translate_text(trim(read_input(o.input)), o.map, reg) << "\n";
  if (o.map == "k") std::ofstream(o.registry) << reg.to_json().dump(2) << "\n";
  return kOk;
}

// ---- check-embedding --------------------------------------------------------

int check_embedding_cmd(const Options& o) {
  EmbeddingKind kind = embedding_kind_from_name(o.kind);
  Calculus src = embedding_source(kind);
  std::vector<Sequent> corpus;
  if (!o.input.empty()) {
    Calculus parse_as = src == Calculus::classical ? Calculus::dm : src;
    for (const auto& line : input_lines(o)) corpus.push_back(parse_sequent(trim(line), parse_as));
  } else {
    CorpusOptions opts;
    opts.calculus = src == Calculus::classical ? Calculus::dm : src;
    opts.max_weight = o.max_weight.value_or(20);
    opts.star_succedent = false;
    corpus = CorpusGenerator(o.seed, opts).sequents(o.count);
  }
  // CL corpora are h-images of DM sequents.
  if (src == Calculus::classical)
    for (auto& s : corpus) s = h_sequent(s);
  ClassRegistry reg;
  EmbeddingReport r = check_embedding(kind, corpus, &reg);
  if (proof_format_from_name(o.format) == ProofFormat::json) {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    std::cout << embedding_kind_name(kind) << ": " << r.agreements << "/" << r.total << " agree\n";
    if (r.variant_agreements) std::cout << "~phi variant: " << *r.variant_agreements << "/" << r.total << "\n";
    for (const auto& ce : r.counterexamples) {
      std::cout << "  " << print_sequent(ce.source) << " [" << (ce.source_derivable ? "+" : "-") << "] ->";
      for (const auto& t : ce.targets) std::cout << " " << print_sequent(t);
      std::cout << " [" << (ce.target_derivable ? "+" : "-") << "]\n";
    }
  }
  return r.all_agree() ? kOk : kNegative;
}

// ---- validity / algebra -----------------------------------------------------

int validity_cmd(const Options& o) {
  Variety v = variety_from_name(o.variety);
  Calculus c = v == Variety::sdm ? Calculus::sdm : Calculus::dm;
  Sequent s = parse_sequent(trim(read_input(o.input)), c);
  std::optional<CounterWitness> w;
  std::size_t checked = 0;
  if (v == Variety::dm) {
    FiniteAlgebra a = dm4();
    checked = 1;
    if (auto sigma = counter_assignment(s, a)) w = CounterWitness{a, *sigma};
  } else {
    checked = enumerate_algebras(v, o.max_size).size();
    w = refute(s, v, o.max_size);
  }
  if (!w) {
    std::cout << "VALID in " << checked << " algebra" << (checked == 1 ? "" : "s") << "\n";
    return kOk;
  }
  json out = {{"algebra", w->algebra.to_json()}, {"assignment", to_json(w->assignment, w->algebra)}};
  std::cout << "INVALID\n" << out.dump(2) << "\n";
  return kNegative;
}

int algebra_cmd(const Options& o, const std::string& action) {
  if (action != "enumerate") throw std::invalid_argument("unknown algebra action '" + action + "'");
  Variety v = variety_from_name(o.variety);
  json list = json::array();
  for (const auto& a : enumerate_algebras(v, o.max_size)) list.push_back(a.to_json());
  std::cout << list.dump(2) << "\n";
  return kOk;
}

// ---- render / corpus --------------------------------------------------------

int render_cmd(const Options& o, bool calculus_given) {
  Derivation d = proof_from_json(json::parse(read_input(o.input)));
  Calculus c = d->sequent.calculus();
  if (calculus_given && calculus_from_name(o.calculus) != c)
    throw std::invalid_argument("proof is tagged " + std::string(calculus_name(c)) + ", not " + o.calculus);
  std::cout << render_checked(d, proof_format_from_name(o.format));
  return kOk;
}

int corpus_cmd(const Options& o) {
  CorpusOptions opts;
  opts.calculus = calculus_from_name(o.calculus);
  if (opts.calculus != Calculus::sdm && opts.calculus != Calculus::dm)
    throw std::invalid_argument("corpus generation supports g3sdm and g3dm");
  opts.max_weight = o.max_weight;
  auto list = o.derivable_only ? derivable_corpus(o.seed, opts, o.count)
                               : CorpusGenerator(o.seed, opts).sequents(o.count);
  for (const auto& s : list) std::cout << print_sequent(s) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"morgan-kit: proof search, interpolation and translations for G3SDM and G3DM"};
  app.require_subcommand(1);
  Options o;

  auto add_calculus = [&o](CLI::App* c) {
    return c->add_option("--calculus", o.calculus, "g3sdm | g3dm | g3ip | g3cp")->capture_default_str();
  };
  auto add_format = [&o](CLI::App* c) {
    c->add_option("--format", o.format, "ascii | latex | json")->capture_default_str();
  };

  auto* prove = app.add_subcommand("prove", "print a derivation or NOT DERIVABLE");
  auto* decide = app.add_subcommand("decide", "exit 0 when derivable, 1 otherwise");
  for (auto* c : {prove, decide}) {
    add_calculus(c);
    c->add_option("--height", o.height, "only derivations of height at most N");
    c->add_flag("--batch", o.batch, "read one sequent per line, write JSON lines");
    c->add_option("input", o.input, "sequent, @file, or - for stdin in batch mode");
  }
  add_format(prove);

  auto* interp = app.add_subcommand("interpolate", "interpolant for 'G1 ; G2 => b'");
  add_calculus(interp);
  add_format(interp);
  interp->add_option("input", o.input)->required();

  auto* translate = app.add_subcommand("translate", "apply t, f, nn, k, h or g");
  translate->add_option("--map", o.map, "t | f | nn | k | h | g")->capture_default_str();
  translate->add_option("--registry", o.registry, "k class registry sidecar")->capture_default_str();
  translate->add_option("input", o.input)->required();

  auto* embed = app.add_subcommand("check-embedding", "compare source and target derivability");
  embed->add_option("--kind", o.kind, "dm-to-sdm-f | dm-glivenko-sdm | sdm-to-int-k | dm-to-cl-h | cl-to-int-g | diagram")
      ->required();
  embed->add_option("--seed", o.seed)->capture_default_str();
  embed->add_option("--count", o.count)->capture_default_str();
  embed->add_option("--max-weight", o.max_weight);
  add_format(embed);
  embed->add_option("input", o.input, "@file of sequents (default: a seeded corpus)");

  auto* validity = app.add_subcommand("validity", "algebraic validity / refutation");
  validity->add_option("--variety", o.variety, "sdm | dm")->capture_default_str();
  validity->add_option("--max-size", o.max_size)->capture_default_str();
  validity->add_option("input", o.input)->required();

  std::string algebra_action;
  auto* algebra = app.add_subcommand("algebra", "finite algebra tooling");
  algebra->add_option("action", algebra_action, "enumerate")->required();
  algebra->add_option("--variety", o.variety, "sdm | dm")->capture_default_str();
  algebra->add_option("--max-size", o.max_size)->capture_default_str();

  auto* rend = app.add_subcommand("render", "render a morgan-kit/proof/v1 document");
  auto* rend_calc = add_calculus(rend);
  add_format(rend);
  rend->add_option("input", o.input, "@file or inline JSON")->required();

  auto* corpus = app.add_subcommand("corpus", "seeded random sequents, one per line");
  add_calculus(corpus);
  corpus->add_option("--seed", o.seed)->capture_default_str();
  corpus->add_option("--count", o.count)->capture_default_str();
  corpus->add_option("--max-weight", o.max_weight);
  corpus->add_flag("--derivable", o.derivable_only, "keep only derivable sequents");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (prove->parsed() || decide->parsed()) {
      bool decide_only = decide->parsed();
      if (o.batch) return batch(o, decide_only);
      if (o.input.empty()) throw std::invalid_argument("missing sequent");
      return prove_one(o, read_input(o.input), decide_only, nullptr);
    }
    if (interp->parsed()) return interpolate_cmd(o);
    if (translate->parsed()) return translate_cmd(o);
    if (embed->parsed()) return check_embedding_cmd(o);
    if (validity->parsed()) return validity_cmd(o);
    if (algebra->parsed()) return algebra_cmd(o, algebra_action);
    if (rend->parsed()) return render_cmd(o, rend_calc->count() > 0);
    if (corpus->parsed()) return corpus_cmd(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InternalError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}
