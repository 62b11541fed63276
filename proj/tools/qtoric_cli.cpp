// qtoric: command-line front end over the qtoric library.
//
// Every subcommand reads JSON entries (a file path, or the name of a bundled
// corpus entry) and writes a JSON or aligned-text report to stdout.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>

#include "qtoric/errors.hpp"
#include "qtoric/json_io.hpp"

#ifndef QTORIC_CORPUS_DIR
#define QTORIC_CORPUS_DIR "data/corpus"
#endif

namespace {

namespace fs = std::filesystem;
using namespace qtoric;
using json_io::json;

enum Exit { kOk = 0, kInput = 1, kInvalid = 2, kInequivalent = 3, kIncomparable = 4, kBudget = 5 };

struct Options {
  std::string format = "json";
  std::string flavor = "complex";
  bool diagnostics = false;
  std::size_t budget = 0;
  std::string corpus = QTORIC_CORPUS_DIR;
};

json load_input(const std::string& arg, const Options& opt) {
  if (fs::exists(arg)) return json_io::read_json_file(arg);
  const fs::path named = fs::path(opt.corpus) / (arg + ".json");
  if (fs::exists(named)) return json_io::read_json_file(named);
  throw InputError("no such file or corpus entry: " + arg);
}

// Flattens a JSON document into "path  value" lines with aligned columns.
void flatten(const json& j, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& out) {
  const bool scalar_array =
      j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) {
        return e.is_primitive() ||
               (e.is_array() && std::all_of(e.begin(), e.end(),
                                            [](const json& x) { return x.is_primitive(); }));
      });
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !scalar_array) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out.emplace_back(path, j.get<std::string>());
  } else {
    out.emplace_back(path, j.dump());
  }
}

void emit(const json& report, const Options& opt) {
  if (opt.format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows)
    std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

json rendered(const cohomology::GradedRingPresentation& pres,
              const std::vector<cohomology::CohomologyClass>& classes) {
  json out = json::array();
  for (const auto& c : classes) out.push_back(cohomology::render(pres, c));
  return out;
}

int cmd_validate(const std::string& input, const Options& opt) {
  const json report = json_io::validation_report(json_io::entry_from_json(load_input(input, opt)));
  emit(report, opt);
  return report.at("valid").get<bool>() ? kOk : kInvalid;
}

int cmd_homology(const std::string& input, const Options& opt) {
  const json j = load_input(input, opt);
  const auto k = j.contains("complex")
                     ? json_io::complex_from_json(j.at("complex"))
                     : json_io::polytope_from_json(j.contains("polytope") ? j.at("polytope") : j).dual();
  const auto flavor = momentangle::parse_flavor(opt.flavor);
  const auto model = momentangle::build_cell_model(k, flavor, opt.budget);
  const auto h = momentangle::homology(model);
  json report = json_io::to_json(h);
  report["flavor"] = momentangle::to_string(flavor);
  report["top_nonvanishing_degree"] = h.top_nonvanishing_degree();
  report["euler_characteristic"] = h.euler_characteristic();
  emit(report, opt);
  return kOk;
}

int cmd_cohomology(const std::string& input, int max_degree, const Options& opt) {
  const auto entry = json_io::entry_from_json(load_input(input, opt));
  const auto pres = entry.characteristic
                        ? cohomology::quasitoric_presentation(entry.polytope, *entry.characteristic)
                        : cohomology::sr_presentation(entry.polytope.dual(),
                                                      entry.quaternionic ? 4 : 2);
  json report;
  report["generator_degree"] = pres.generator_degree;
  report["monomial_ideal"] = pres.monomial_ideal;
  report["free_generators"] = pres.free_generators;
  report["eliminated"] = pres.eliminated;
  const int top = max_degree >= 0 ? max_degree
                                  : (pres.is_quasitoric() ? pres.top_degree()
                                                          : 2 * pres.generator_degree);
  json comps = json::array();
  for (int d = 0; d <= top; d += pres.generator_degree) {
    const auto c = cohomology::graded_component(pres, d);
    json torsion = json::array();
    for (const auto& t : c.group.torsion) torsion.push_back(json_io::integer_to_json(t));
    json basis = json::array();
    for (std::size_t b = 0; b < c.basis.size(); ++b) {
      IntVector e(c.basis.size(), Integer(0));
      e[b] = 1;
      basis.push_back(cohomology::render(pres, cohomology::CohomologyClass{d, e}));
    }
    comps.push_back({{"degree", d},
                     {"rank", c.group.free_rank},
                     {"torsion", torsion},
                     {"monomials", basis}});
  }
  report["components"] = comps;
  if (pres.is_quasitoric())
    report["total_chern_class"] = rendered(pres, cohomology::total_chern_class(pres));
  emit(report, opt);
  return kOk;
}

int cmd_chern(const std::string& input, const Options& opt) {
  const auto entry = json_io::entry_from_json(load_input(input, opt));
  if (!entry.characteristic) throw UnsupportedError("chern needs a characteristic matrix");
  charpair::require_valid_pair(entry.polytope, *entry.characteristic);
  const auto tuple =
      bundles::kernel_chern_classes(entry.polytope, *entry.characteristic, opt.diagnostics);
  const auto pres = cohomology::quasitoric_presentation(entry.polytope, *entry.characteristic);
  json report = json_io::to_json(tuple);
  report["rendered"] = rendered(pres, tuple.classes);
  if (tuple.row_formula_classes) {
    report["row_formula_rendered"] = rendered(pres, *tuple.row_formula_classes);
    report["row_formula_differs"] = *tuple.row_formula_classes != tuple.classes;
  }
  emit(report, opt);
  return kOk;
}

bundles::QuaternionicPrimaryTuple primary_tuple(const json_io::CorpusEntry& e) {
  return bundles::quaternionic_primary_tuple(e.polytope, *e.quaternionic, e.h4,
                                             json_io::kernel_map_for(e));
}

int cmd_qprimary(const std::string& input, const Options& opt) {
  const auto entry = json_io::entry_from_json(load_input(input, opt));
  if (!entry.quaternionic) throw UnsupportedError("qprimary needs a quaternionic functor");
  emit(json_io::to_json(primary_tuple(entry)), opt);
  return kOk;
}

int cmd_compare(const std::string& a, const std::string& b, const Options& opt) {
  const auto e1 = json_io::entry_from_json(load_input(a, opt));
  const auto e2 = json_io::entry_from_json(load_input(b, opt));
  const std::size_t bound = opt.budget ? opt.budget : combinatorics::kDefaultSymmetryBound;
  classify::RigidityVerdict verdict;
  if (e1.characteristic && e2.characteristic) {
    verdict = classify::rigidity_verdict_complex(e1.polytope, *e1.characteristic, e2.polytope,
                                                 *e2.characteristic, bound);
  } else if (e1.quaternionic && e2.quaternionic) {
    verdict = classify::rigidity_verdict_quaternionic(
        e1.polytope, *e1.quaternionic, primary_tuple(e1), e2.polytope, *e2.quaternionic,
        primary_tuple(e2), 4 * e1.polytope.dim(), bound);
  }
  emit(json_io::to_json(verdict), opt);
  return classify::exit_code(verdict.level);
}

int cmd_examples(const Options& opt) {
  json list = json::array();
  for (const auto& e : json_io::load_corpus(opt.corpus))
    list.push_back({{"name", e.name},
                    {"kind", e.is_quaternionic() ? "quaternionic" : "complex"},
                    {"m", e.polytope.facet_count()},
                    {"n", e.polytope.dim()}});
  emit(json{{"entries", list}}, opt);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric and quoric characteristic data: validation, homology, "
               "cohomology, bundle invariants and equivalence"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--corpus", opt.corpus, "Corpus directory for named entries");

  std::string input, input2;
  int max_degree = -1;

  auto* validate = app.add_subcommand("validate", "Validate characteristic data");
  validate->add_option("input", input, "Entry file or corpus name")->required();

  auto* homology = app.add_subcommand("homology", "Homology of the moment-angle cell model");
  homology->add_option("input", input, "Entry, polytope or complex file")->required();
  homology->add_option("--flavor", opt.flavor, "complex or quaternionic")
      ->check(CLI::IsMember({"complex", "quaternionic"}));
  homology->add_option("--budget", opt.budget, "Maximum vertex count for the cell model");

  auto* coh = app.add_subcommand("cohomology", "Graded components of the cohomology ring");
  coh->add_option("input", input, "Entry file or corpus name")->required();
  coh->add_option("--max-degree", max_degree, "Highest degree to list");

  auto* chern = app.add_subcommand("chern", "Chern classes of the kernel bundle");
  chern->add_option("input", input, "Entry file or corpus name")->required();
  chern->add_flag("--diagnostics", opt.diagnostics, "Also report the row-formula tuple");

  auto* qprimary = app.add_subcommand("qprimary", "Primary degree-4 classes (quaternionic)");
  qprimary->add_option("input", input, "Entry file or corpus name")->required();

  auto* compare = app.add_subcommand("compare", "Equivalence verdict for two entries");
  compare->add_option("first", input, "Entry file or corpus name")->required();
  compare->add_option("second", input2, "Entry file or corpus name")->required();
  compare->add_option("--budget", opt.budget, "Maximum facet count for symmetry search");

  auto* examples = app.add_subcommand("examples", "List the bundled corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*validate) return cmd_validate(input, opt);
    if (*homology) return cmd_homology(input, opt);
    if (*coh) return cmd_cohomology(input, max_degree, opt);
    if (*chern) return cmd_chern(input, opt);
    if (*qprimary) return cmd_qprimary(input, opt);
    if (*compare) return cmd_compare(input, input2, opt);
    if (*examples) return cmd_examples(opt);
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const IncomparableError& e) {
    std::cerr << "incomparable: " << e.what() << "\n";
    return kIncomparable;
  } catch (const ValidationError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kInvalid;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity check failed: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const json_io::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
