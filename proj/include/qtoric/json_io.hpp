#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qtoric/bundles.hpp"
#include "qtoric/charpair.hpp"
#include "qtoric/classify.hpp"
#include "qtoric/cohomology.hpp"
#include "qtoric/combinatorics.hpp"
#include "qtoric/momentangle.hpp"

// JSON schemas shared by the CLI, the corpus and the tests.
//
//   polytope        {"m": int, "n": int, "vertices": [[int,...],...]}
//   complex         {"m": int, "maximal_faces": [[int,...],...]}
//   characteristic  {"n": int, "m": int, "columns": [[int,...],...]}
//   functor         {"n_act": int, "labels": [[int,...],...]}
//   h4              {"rank": int, "facet_classes": [[int,...],...]}
//   corpus entry    {"name": str, "polytope": {...},
//                    "characteristic": {...} | "quaternionic": {...},
//                    "h4": {...}?, "kernel_map": [[int,...],...]?,
//                    "expected": {...}?}
//
// All indices are 1-based. Parse failures raise InputError; structural
// violations raise ValidationError.
namespace qtoric::json_io {

using nlohmann::json;

json integer_to_json(const Integer& x);
Integer integer_from_json(const json& j);
json vector_to_json(const IntVector& v);
json matrix_to_json(const IntMatrix& m);  // array of rows
IntMatrix matrix_from_json(const json& j, std::size_t cols_if_empty = 0);

combinatorics::SimplePolytope polytope_from_json(const json& j);
combinatorics::SimplicialComplex complex_from_json(const json& j);
charpair::CharacteristicMatrix characteristic_from_json(const json& j);
charpair::QuaternionicIsotropyFunctor functor_from_json(const json& j);
bundles::H4Presentation h4_from_json(const json& j);

json to_json(const combinatorics::SimplePolytope& p);
json to_json(const combinatorics::SimplicialComplex& k);
json to_json(const charpair::CharacteristicMatrix& l);
json to_json(const charpair::QuaternionicIsotropyFunctor& f);

json to_json(const charpair::PairReport& r);
json to_json(const charpair::FunctorReport& r);
json to_json(const momentangle::HomologyProfile& h);
json to_json(const bundles::ChernTuple& t);
json to_json(const bundles::QuaternionicPrimaryTuple& t);
json to_json(const classify::RigidityVerdict& v);

struct CorpusEntry {
  std::string name;
  combinatorics::SimplePolytope polytope;
  std::optional<charpair::CharacteristicMatrix> characteristic;
  std::optional<charpair::QuaternionicIsotropyFunctor> quaternionic;
  std::optional<bundles::H4Presentation> h4;
  std::optional<IntMatrix> kernel_map;
  std::optional<json> expected;

  bool is_quaternionic() const { return quaternionic.has_value(); }
};

// Full validation report for an entry: per-check details, the dimension of
// the moment-angle manifold and an overall "valid" flag. For quaternionic
// entries the dimension block records whether 3m + n differs from m + n.
json validation_report(const CorpusEntry& e);

json read_json_file(const std::filesystem::path& path);
CorpusEntry entry_from_json(const json& j);
CorpusEntry load_entry(const std::filesystem::path& path);

// Loads every *.json file in `dir`, sorted by name. Entries must validate
// and carry unique names; violations raise ValidationError.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

// The kernel map for a quaternionic entry: explicit, or the standard map for
// the simplex family. Throws UnsupportedError otherwise.
IntMatrix kernel_map_for(const CorpusEntry& e);

}  // namespace qtoric::json_io
