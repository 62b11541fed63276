#include "qtoric/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "qtoric/errors.hpp"

namespace qtoric::json_io {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer())
    throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<combinatorics::Face> faces_from_json(const json& j, const char* key) {
  const json& arr = field(j, key);
  if (!arr.is_array()) throw InputError(std::string("'") + key + "' must be an array");
  std::vector<combinatorics::Face> out;
  for (const auto& f : arr) {
    if (!f.is_array()) throw InputError(std::string("entries of '") + key + "' must be arrays");
    combinatorics::Face face;
    for (const auto& v : f) {
      if (!v.is_number_integer()) throw InputError("face entries must be integers");
      face.push_back(v.get<int>());
    }
    out.push_back(std::move(face));
  }
  return out;
}

json faces_to_json(const std::vector<combinatorics::Face>& faces) {
  json arr = json::array();
  for (const auto& f : faces) arr.push_back(f);
  return arr;
}

}  // namespace

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0)
      throw InputError("bad integer string '" + j.get<std::string>() + "'");
    return x;
  }
  throw InputError("expected an integer");
}

json vector_to_json(const IntVector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(integer_to_json(x));
  return arr;
}

json matrix_to_json(const IntMatrix& m) {
  json arr = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) arr.push_back(vector_to_json(m.row(r)));
  return arr;
}

IntMatrix matrix_from_json(const json& j, std::size_t cols_if_empty) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw InputError("matrix rows must be arrays");
    IntVector row;
    for (const auto& x : r) row.push_back(integer_from_json(x));
    rows.push_back(std::move(row));
  }
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  try {
    return IntMatrix::from_rows(rows, cols);
  } catch (const ShapeError&) {
    throw InputError("matrix rows have different lengths");
  }
}

combinatorics::SimplePolytope polytope_from_json(const json& j) {
  return combinatorics::SimplePolytope(int_field(j, "m"), int_field(j, "n"),
                                       faces_from_json(j, "vertices"));
}

combinatorics::SimplicialComplex complex_from_json(const json& j) {
  return combinatorics::SimplicialComplex(int_field(j, "m"),
                                          faces_from_json(j, "maximal_faces"));
}

charpair::CharacteristicMatrix characteristic_from_json(const json& j) {
  const int n = int_field(j, "n");
  const int m = int_field(j, "m");
  const json& cols = field(j, "columns");
  if (!cols.is_array() || cols.size() != static_cast<std::size_t>(m))
    throw InputError("'columns' must list m = " + std::to_string(m) + " columns");
  std::vector<IntVector> columns;
  for (const auto& c : cols) {
    if (!c.is_array() || c.size() != static_cast<std::size_t>(n))
      throw InputError("every column must have n = " + std::to_string(n) + " entries");
    IntVector col;
    for (const auto& x : c) col.push_back(integer_from_json(x));
    columns.push_back(std::move(col));
  }
  return charpair::CharacteristicMatrix(
      n, m, IntMatrix::from_columns(columns, static_cast<std::size_t>(n)));
}

charpair::QuaternionicIsotropyFunctor functor_from_json(const json& j) {
  charpair::QuaternionicIsotropyFunctor f;
  f.n_act = int_field(j, "n_act");
  f.labels = faces_from_json(j, "labels");
  for (auto& g : f.labels) {
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end())
      throw ValidationError("label repeats a coordinate");
  }
  return f;
}

bundles::H4Presentation h4_from_json(const json& j) {
  bundles::H4Presentation h;
  h.rank = static_cast<std::size_t>(int_field(j, "rank"));
  const IntMatrix classes = matrix_from_json(field(j, "facet_classes"), h.rank);
  for (std::size_t r = 0; r < classes.rows(); ++r)
    h.facet_classes.push_back(classes.row(r));
  return h;
}

json to_json(const combinatorics::SimplePolytope& p) {
  return {{"m", p.facet_count()}, {"n", p.dim()}, {"vertices", faces_to_json(p.vertices())}};
}

json to_json(const combinatorics::SimplicialComplex& k) {
  return {{"m", k.vertex_count()}, {"maximal_faces", faces_to_json(k.maximal_faces())}};
}

json to_json(const charpair::CharacteristicMatrix& l) {
  json cols = json::array();
  for (int i = 1; i <= l.m(); ++i) cols.push_back(vector_to_json(l.column(i)));
  return {{"n", l.n()}, {"m", l.m()}, {"columns", cols}};
}

json to_json(const charpair::QuaternionicIsotropyFunctor& f) {
  return {{"n_act", f.n_act}, {"labels", faces_to_json(f.labels)}};
}

json to_json(const charpair::PairReport& r) {
  json cols = json::array();
  for (const auto& c : r.columns)
    cols.push_back({{"facet", c.facet}, {"primitive", c.primitive}});
  json verts = json::array();
  for (const auto& v : r.vertices)
    verts.push_back({{"vertex", v.vertex},
                     {"determinant", integer_to_json(v.determinant)},
                     {"ok", v.ok}});
  json faces = json::array();
  for (const auto& f : r.faces)
    faces.push_back({{"face", f.face},
                     {"minor_gcd", integer_to_json(f.minor_gcd)},
                     {"ok", f.ok}});
  return {{"kind", "characteristic_pair"},
          {"valid", r.valid},
          {"columns", cols},
          {"vertices", verts},
          {"faces", faces},
          {"failures", r.failures}};
}

json to_json(const charpair::FunctorReport& r) {
  json verts = json::array();
  for (const auto& v : r.vertices)
    verts.push_back({{"vertex", v.vertex}, {"disjoint", v.disjoint}});
  json collisions = json::array();
  for (const auto& [a, b] : r.collisions) collisions.push_back({a, b});
  return {{"kind", "quaternionic_functor"},
          {"valid", r.valid},
          {"vertices", verts},
          {"injective", r.injective},
          {"collisions", collisions},
          {"failures", r.failures}};
}

json to_json(const momentangle::HomologyProfile& h) {
  json degrees = json::array();
  for (std::size_t k = 0; k < h.groups.size(); ++k) {
    json torsion = json::array();
    for (const auto& t : h.groups[k].torsion) torsion.push_back(integer_to_json(t));
    degrees.push_back({{"k", k}, {"rank", h.groups[k].free_rank}, {"torsion", torsion}});
  }
  return {{"degrees", degrees}};
}

json to_json(const bundles::ChernTuple& t) {
  json classes = json::array();
  for (const auto& c : t.classes) classes.push_back(vector_to_json(c.coordinates));
  json out = {{"classes", classes}, {"basis", t.basis}};
  if (t.row_formula_classes) {
    json alt = json::array();
    for (const auto& c : *t.row_formula_classes)
      alt.push_back(vector_to_json(c.coordinates));
    out["row_formula_classes"] = alt;
  }
  return out;
}

json to_json(const bundles::QuaternionicPrimaryTuple& t) {
  json classes = json::array();
  for (const auto& c : t.classes) classes.push_back(vector_to_json(c));
  return {{"classes", classes}, {"base_dim", t.base_dim}};
}

json to_json(const classify::RigidityVerdict& v) {
  json out;
  out["level"] = classify::to_string(v.level);
  if (v.certificate) {
    out["certificate"] = {{"delta", matrix_to_json(v.certificate->delta)},
                          {"sigma", v.certificate->sigma},
                          {"signs", v.certificate->signs}};
  } else {
    out["certificate"] = nullptr;
  }
  out["isomorphism"] = v.isomorphism ? json(*v.isomorphism) : json(nullptr);
  out["bundle"] = {{"equal_sublattice", v.equal_sublattice.value_or(false)},
                   {"checked", v.equal_sublattice.has_value()}};
  out["symmetries"] = v.symmetry_policy;
  return out;
}

json validation_report(const CorpusEntry& e) {
  if (!e.characteristic && !e.quaternionic)
    throw InputError("entry has neither 'characteristic' nor 'quaternionic' data");
  json report;
  report["polytope"] = to_json(e.polytope);
  const int m = e.polytope.facet_count();
  const int n = e.polytope.dim();
  bool valid = true;
  if (e.characteristic) {
    const auto r = charpair::validate_characteristic_pair(e.polytope, *e.characteristic);
    report["characteristic"] = to_json(r);
    report["dimension"] = {{"flavor", "complex"}, {"moment_angle", m + n}, {"quotient", 2 * n}};
    valid = valid && r.valid;
  }
  if (e.quaternionic) {
    const auto r = charpair::validate_quaternionic_functor(e.polytope, *e.quaternionic);
    json fr = to_json(r);
    fr["global"] = charpair::validate_global(*e.quaternionic);
    report["quaternionic"] = fr;
    const auto dim = momentangle::quaternionic_dimension_check(m, n);
    report["dimension"] = {{"flavor", "quaternionic"},
                           {"moment_angle", dim.dimension},
                           {"m_plus_n", dim.m_plus_n},
                           {"closed_form_mismatch", dim.mismatch},
                           {"quotient", 4 * n}};
    valid = valid && r.valid;
  }
  report["valid"] = valid;
  return report;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

CorpusEntry entry_from_json(const json& j) {
  try {
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "";
    CorpusEntry e{std::move(name), polytope_from_json(field(j, "polytope")),
                  std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                  std::nullopt};
    if (j.contains("characteristic"))
      e.characteristic = characteristic_from_json(j.at("characteristic"));
    if (j.contains("quaternionic"))
      e.quaternionic = functor_from_json(j.at("quaternionic"));
    if (j.contains("h4")) e.h4 = h4_from_json(j.at("h4"));
    if (j.contains("kernel_map"))
      e.kernel_map = matrix_from_json(j.at("kernel_map"));
    if (j.contains("expected")) e.expected = j.at("expected");
    return e;
  } catch (const json::exception& ex) {
    throw InputError(ex.what());
  }
}

CorpusEntry load_entry(const std::filesystem::path& path) {
  return entry_from_json(read_json_file(path));
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& de : std::filesystem::directory_iterator(dir))
    if (de.path().extension() == ".json") files.push_back(de.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  for (const auto& f : files) {
    CorpusEntry e = load_entry(f);
    if (e.name.empty()) throw ValidationError(f.string() + ": entry has no name");
    if (!names.insert(e.name).second)
      throw ValidationError("duplicate corpus entry name '" + e.name + "'");
    if (e.characteristic) charpair::require_valid_pair(e.polytope, *e.characteristic);
    if (e.quaternionic) charpair::require_valid_functor(e.polytope, *e.quaternionic);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  return out;
}

IntMatrix kernel_map_for(const CorpusEntry& e) {
  if (e.kernel_map) return *e.kernel_map;
  if (e.polytope.facet_count() == e.polytope.dim() + 1)
    return bundles::standard_simplex_kernel_map(e.polytope.dim());
  throw UnsupportedError("entry '" + e.name +
                         "' needs an explicit kernel_map for this base");
}

}  // namespace qtoric::json_io
