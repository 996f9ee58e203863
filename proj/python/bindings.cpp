// Python bindings: a string-in, string/dict-out surface over the core library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "morgan/algebra.hpp"
#include "morgan/corpus.hpp"
#include "morgan/interpolation.hpp"
#include "morgan/prover.hpp"
#include "morgan/render.hpp"
#include "morgan/syntax.hpp"
#include "morgan/translations.hpp"

namespace py = pybind11;
using namespace morgan;

namespace {

// JSON values cross the boundary through the json module.
py::object to_py(const json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

json from_py(const py::object& o) {
  py::object dumps = py::module_::import("json").attr("dumps");
  return json::parse(dumps(o).cast<std::string>());
}

Sequent parse(const std::string& text, const std::string& calculus) {
  return parse_sequent(text, calculus_from_name(calculus));
}

py::object prove(const std::string& text, const std::string& calculus, const std::string& format) {
  Calculus c = calculus_from_name(calculus);
  std::optional<Derivation> d;
  {
    py::gil_scoped_release release;
    d = derive(c, parse_sequent(text, c));
  }
  if (!d) return py::none();
  if (proof_format_from_name(format) == ProofFormat::json) return to_py(proof_to_json(*d));
  return py::str(render(*d, proof_format_from_name(format)));
}

py::dict interpolate_py(const std::string& text, const std::string& calculus) {
  Calculus c = calculus_from_name(calculus);
  SplitSequent sp = parse_split_sequent(text, c);
  Partition part{sp.left, sp.right, sp.succedent};
  Sequent goal = partition_goal(c, part);
  auto d = derive(c, goal);
  if (!d) throw std::invalid_argument("not derivable: " + print_sequent(goal));
  auto r = interpolate(c, *d, part);
  py::dict out;
  out["interpolant"] = print_structure(r.interpolant);
  out["left"] = print_sequent(r.left_derivation->sequent);
  out["right"] = print_sequent(r.right_derivation->sequent);
  out["verified"] = verify_interpolant(c, goal, part, r.interpolant);
  return out;
}

py::dict check_embedding_py(const std::string& kind_name, std::optional<std::vector<std::string>> sequents,
                            std::uint64_t seed, std::size_t count, std::uint64_t max_weight) {
  EmbeddingKind kind = embedding_kind_from_name(kind_name);
  Calculus src = embedding_source(kind);
  Calculus gen_as = src == Calculus::classical ? Calculus::dm : src;
  std::vector<Sequent> corpus;
  if (sequents) {
    for (const auto& s : *sequents) corpus.push_back(parse_sequent(s, gen_as));
  } else {
    CorpusOptions opts;
    opts.calculus = gen_as;
    opts.max_weight = max_weight;
    opts.star_succedent = false;
    corpus = CorpusGenerator(seed, opts).sequents(count);
  }
  if (src == Calculus::classical)
    for (auto& s : corpus) s = h_sequent(s);
  EmbeddingReport r;
  {
    py::gil_scoped_release release;
    r = check_embedding(kind, corpus);
  }
  return to_py(r.to_json()).cast<py::dict>();
}

py::object refute_py(const std::string& text, const std::string& variety, std::size_t max_size) {
  Variety v = variety_from_name(variety);
  Sequent s = parse_sequent(text, v == Variety::sdm ? Calculus::sdm : Calculus::dm);
  auto w = refute(s, v, max_size);
  if (!w) return py::none();
  py::dict out;
  out["algebra"] = to_py(w->algebra.to_json());
  out["assignment"] = to_py(to_json(w->assignment, w->algebra));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Proof search, interpolation, translations and finite algebras for G3SDM and G3DM";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "derivable",
      [](const std::string& text, const std::string& calculus) {
        Sequent s = parse(text, calculus);
        py::gil_scoped_release release;
        return derivable(s.calculus(), s);
      },
      py::arg("sequent"), py::arg("calculus") = "g3sdm");
  m.def("prove", &prove, py::arg("sequent"), py::arg("calculus") = "g3sdm", py::arg("format") = "ascii",
        "Rendered derivation (a dict for format='json'), or None.");
  m.def(
      "min_height",
      [](const std::string& text, const std::string& calculus) {
        Sequent s = parse(text, calculus);
        return min_height(s.calculus(), s);
      },
      py::arg("sequent"), py::arg("calculus") = "g3sdm");
  m.def(
      "derivable_within_height",
      [](const std::string& text, std::size_t n, const std::string& calculus) {
        Sequent s = parse(text, calculus);
        return derivable_within_height(s.calculus(), s, n);
      },
      py::arg("sequent"), py::arg("height"), py::arg("calculus") = "g3sdm");
  m.def(
      "check_proof",
      [](const py::object& proof) {
        Derivation d = proof_from_json(from_py(proof));
        auto r = check_derivation(d->sequent.calculus(), d);
        return py::make_tuple(r.ok, r.diagnostic);
      },
      py::arg("proof"), "Replays a morgan-kit/proof/v1 document; returns (ok, diagnostic).");
  m.def(
      "render",
      [](const py::object& proof, const std::string& format) {
        return render(proof_from_json(from_py(proof)), proof_format_from_name(format));
      },
      py::arg("proof"), py::arg("format") = "ascii");
  m.def("interpolate", &interpolate_py, py::arg("split_sequent"), py::arg("calculus") = "g3sdm");
  m.def(
      "translate",
      [](const std::string& text, const std::string& map) {
        ClassRegistry reg;
        return translate_text(text, map, reg);
      },
      py::arg("text"), py::arg("map"));
  m.def("check_embedding", &check_embedding_py, py::arg("kind"), py::arg("sequents") = py::none(),
        py::arg("seed") = 1, py::arg("count") = 100, py::arg("max_weight") = 20);
  m.def(
      "valid",
      [](const std::string& text, const std::string& variety, std::size_t max_size) {
        Variety v = variety_from_name(variety);
        Sequent s = parse_sequent(text, v == Variety::sdm ? Calculus::sdm : Calculus::dm);
        if (v == Variety::dm) return valid(s, dm4());
        return !refute(s, v, max_size).has_value();
      },
      py::arg("sequent"), py::arg("variety") = "sdm", py::arg("max_size") = 4,
      "DM: validity in the four-element De Morgan algebra. SDM: no counter-witness up to max_size.");
  m.def("refute", &refute_py, py::arg("sequent"), py::arg("variety") = "sdm", py::arg("max_size") = 4);
  m.def(
      "enumerate_algebras",
      [](const std::string& variety, std::size_t max_size) {
        py::list out;
        for (const auto& a : enumerate_algebras(variety_from_name(variety), max_size)) out.append(to_py(a.to_json()));
        return out;
      },
      py::arg("variety"), py::arg("max_size") = 4);
  m.def(
      "corpus",
      [](const std::string& calculus, std::uint64_t seed, std::size_t count, std::optional<std::uint64_t> max_weight,
         bool derivable_only) {
        CorpusOptions opts;
        opts.calculus = calculus_from_name(calculus);
        opts.max_weight = max_weight;
        auto list = derivable_only ? derivable_corpus(seed, opts, count) : CorpusGenerator(seed, opts).sequents(count);
        std::vector<std::string> out;
        for (const auto& s : list) out.push_back(print_sequent(s));
        return out;
      },
      py::arg("calculus") = "g3sdm", py::arg("seed") = 1, py::arg("count") = 100, py::arg("max_weight") = py::none(),
      py::arg("derivable") = false);
}
