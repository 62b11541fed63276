#include "qtoric/momentangle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>

#include "qtoric/errors.hpp"

namespace qtoric::momentangle {
namespace {

using combinatorics::FaceMask;

std::uint64_t pow3(int e) {
  std::uint64_t p = 1;
  for (int i = 0; i < e; ++i) p *= 3;
  return p;
}

// Position 0 is the most significant base-3 digit, so numeric order on codes
// is lexicographic order on tuples.
CellRole digit(std::uint64_t code, int pos, int m) {
  return static_cast<CellRole>(code / pow3(m - 1 - pos) % 3);
}

int role_dim(CellRole r, Flavor f) {
  switch (r) {
    case CellRole::Base:
      return 0;
    case CellRole::Sphere:
      return sphere_cell_dim(f);
    case CellRole::Disc:
      return disc_cell_dim(f);
  }
  return 0;
}

std::vector<FaceMask> all_faces_with_empty(
    const combinatorics::SimplicialComplex& k) {
  std::set<FaceMask> faces{0};
  for (FaceMask f : k.maximal_masks())
    for (FaceMask sub = f; sub; sub = (sub - 1) & f) faces.insert(sub);
  return {faces.begin(), faces.end()};
}

std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::size_t b = 1;
  for (std::size_t i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

}  // namespace

int sphere_cell_dim(Flavor f) { return f == Flavor::Complex ? 1 : 3; }
int disc_cell_dim(Flavor f) { return f == Flavor::Complex ? 2 : 4; }
std::size_t default_budget(Flavor f) { return f == Flavor::Complex ? 10 : 9; }

std::string to_string(Flavor f) {
  return f == Flavor::Complex ? "complex" : "quaternionic";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "complex") return Flavor::Complex;
  if (s == "quaternionic") return Flavor::Quaternionic;
  throw DomainError("unknown flavor '" + s + "'");
}

IntMatrix BoundaryMatrix::to_dense() const {
  IntMatrix d(rows, cols);
  for (const auto& e : entries) d(e.row, e.col) += e.value;
  return d;
}

std::size_t CellModel::cell_count(int dim) const {
  if (dim < 0 || dim > top_dimension()) return 0;
  return cells_[static_cast<std::size_t>(dim)].size();
}

std::vector<CellTuple> CellModel::cells(int dim) const {
  std::vector<CellTuple> out;
  if (dim < 0 || dim > top_dimension()) return out;
  for (std::uint64_t code : cells_[static_cast<std::size_t>(dim)]) {
    CellTuple t(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) t[static_cast<std::size_t>(i)] = digit(code, i, m_);
    out.push_back(std::move(t));
  }
  return out;
}

const BoundaryMatrix& CellModel::boundary(int dim) const {
  if (dim < 1 || dim > top_dimension())
    throw DomainError("no boundary map out of dimension " + std::to_string(dim));
  return boundary_[static_cast<std::size_t>(dim)];
}

CellModel build_cell_model(const combinatorics::SimplicialComplex& k,
                           Flavor flavor, std::size_t budget) {
  if (budget == 0) budget = default_budget(flavor);
  const int m = k.vertex_count();
  if (static_cast<std::size_t>(m) > budget)
    throw BudgetError("cell model on m=" + std::to_string(m) +
                          " vertices exceeds the " + to_string(flavor) +
                          " budget",
                      static_cast<long long>(budget));

  const int sdim = sphere_cell_dim(flavor);
  const int ddim = disc_cell_dim(flavor);
  const FaceMask all = (FaceMask{1} << m) - 1;

  CellModel model;
  model.m_ = m;
  model.flavor_ = flavor;
  std::map<int, std::vector<std::uint64_t>> by_dim;
  for (FaceMask disc : all_faces_with_empty(k)) {
    const FaceMask rest = all & ~disc;
    // Every subset of the complement carries sphere cells.
    for (FaceMask sph = rest;; sph = (sph - 1) & rest) {
      std::uint64_t code = 0;
      for (int i = 0; i < m; ++i) {
        code *= 3;
        if (disc >> i & 1)
          code += 2;
        else if (sph >> i & 1)
          code += 1;
      }
      const int dim = std::popcount(disc) * ddim + std::popcount(sph) * sdim;
      by_dim[dim].push_back(code);
      if (sph == 0) break;
    }
  }
  const int top = by_dim.rbegin()->first;
  model.cells_.assign(static_cast<std::size_t>(top + 1), {});
  for (auto& [dim, codes] : by_dim) {
    std::sort(codes.begin(), codes.end());
    model.cells_[static_cast<std::size_t>(dim)] = std::move(codes);
  }

  std::vector<std::unordered_map<std::uint64_t, std::size_t>> index(
      model.cells_.size());
  for (std::size_t d = 0; d < model.cells_.size(); ++d)
    for (std::size_t j = 0; j < model.cells_[d].size(); ++j)
      index[d][model.cells_[d][j]] = j;

  model.boundary_.assign(model.cells_.size(), {});
  for (int d = 1; d <= top; ++d) {
    auto& bm = model.boundary_[static_cast<std::size_t>(d)];
    bm.rows = model.cells_[static_cast<std::size_t>(d - 1)].size();
    bm.cols = model.cells_[static_cast<std::size_t>(d)].size();
    // Replacing d by s lowers the dimension by exactly one.
    const auto& target_index = index[static_cast<std::size_t>(d - 1)];
    for (std::size_t col = 0; col < bm.cols; ++col) {
      const std::uint64_t code = model.cells_[static_cast<std::size_t>(d)][col];
      int prefix = 0;
      for (int i = 0; i < m; ++i) {
        const CellRole r = digit(code, i, m);
        if (r == CellRole::Disc) {
          const std::uint64_t face_code = code - pow3(m - 1 - i);
          const auto it = target_index.find(face_code);
          if (it == target_index.end())
            throw IntegrityError("boundary cell missing from model");
          bm.entries.push_back({it->second, col, prefix % 2 == 0 ? 1 : -1});
        }
        prefix += role_dim(r, flavor);
      }
    }
  }
  return model;
}

RankAndFactors sparse_invariant_factors(const BoundaryMatrix& m) {
  std::vector<std::map<std::size_t, Integer>> rows(m.rows);
  std::vector<std::set<std::size_t>> cols(m.cols);
  for (const auto& e : m.entries) {
    Integer& slot = rows[e.row][e.col];
    slot += e.value;
    if (slot == 0) rows[e.row].erase(e.col);
  }
  for (std::size_t r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : rows[r]) cols[c].insert(r);

  RankAndFactors out;
  std::vector<bool> alive(m.rows, true);
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (!alive[r] || rows[r].empty()) continue;
      // Unit entry in this row with the sparsest column.
      std::size_t pc = m.cols;
      for (const auto& [c, v] : rows[r])
        if ((v == 1 || v == -1) && (pc == m.cols || cols[c].size() < cols[pc].size()))
          pc = c;
      if (pc == m.cols) continue;
      const Integer pivot = rows[r][pc];
      const std::vector<std::size_t> others(cols[pc].begin(), cols[pc].end());
      for (std::size_t r2 : others) {
        if (r2 == r) continue;
        const Integer factor = rows[r2][pc] * pivot;
        for (const auto& [c, v] : rows[r]) {
          Integer& slot = rows[r2][c];
          slot -= factor * v;
          if (slot == 0) {
            rows[r2].erase(c);
            cols[c].erase(r2);
          } else {
            cols[c].insert(r2);
          }
        }
      }
      for (const auto& [c, v] : rows[r]) cols[c].erase(r);
      rows[r].clear();
      alive[r] = false;
      ++out.rank;
      out.factors.emplace_back(1);
      progress = true;
    }
  }

  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < m.rows; ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!cols[c].empty()) live_cols.push_back(c);
  if (!live_rows.empty()) {
    std::unordered_map<std::size_t, std::size_t> col_pos;
    for (std::size_t j = 0; j < live_cols.size(); ++j) col_pos[live_cols[j]] = j;
    IntMatrix dense(live_rows.size(), live_cols.size());
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows[live_rows[i]]) dense(i, col_pos[c]) = v;
    for (auto& f : intlat::invariant_factors(dense)) {
      ++out.rank;
      out.factors.push_back(std::move(f));
    }
  }
  return out;
}

int HomologyProfile::top_nonvanishing_degree() const {
  for (int k = static_cast<int>(groups.size()) - 1; k >= 0; --k)
    if (!groups[static_cast<std::size_t>(k)].is_zero()) return k;
  return -1;
}

bool HomologyProfile::is_sphere(int dim) const {
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const bool expect_z = k == 0 || static_cast<int>(k) == dim;
    const intlat::AbelianGroupInvariants want{expect_z ? 1u : 0u, {}};
    if (!(groups[k] == want)) return false;
  }
  return static_cast<int>(groups.size()) > dim;
}

long long HomologyProfile::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < groups.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(groups[k].free_rank);
  return chi;
}

HomologyProfile homology(const CellModel& model) {
  const int top = model.top_dimension();
  std::vector<RankAndFactors> bd(static_cast<std::size_t>(top + 2));
  for (int k = 1; k <= top; ++k)
    bd[static_cast<std::size_t>(k)] = sparse_invariant_factors(model.boundary(k));
  HomologyProfile profile;
  for (int k = 0; k <= top; ++k) {
    intlat::AbelianGroupInvariants g;
    const std::size_t out_rank = bd[static_cast<std::size_t>(k)].rank;
    const auto& in = bd[static_cast<std::size_t>(k + 1)];
    g.free_rank = model.cell_count(k) - out_rank - in.rank;
    for (const auto& f : in.factors)
      if (f > 1) g.torsion.push_back(f);
    std::sort(g.torsion.begin(), g.torsion.end());
    profile.groups.push_back(std::move(g));
  }
  return profile;
}

long long euler_characteristic(const CellModel& model) {
  long long chi = 0;
  for (int k = 0; k <= model.top_dimension(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(model.cell_count(k));
  return chi;
}

int dimension(const combinatorics::SimplicialComplex& k, Flavor flavor, int n) {
  if (!k.is_pure() || k.dimension() != n - 1)
    throw ValidationError("complex is not pure of dimension " +
                          std::to_string(n - 1) +
                          ", so it is not dual to an " + std::to_string(n) +
                          "-polytope");
  const int m = k.vertex_count();
  return flavor == Flavor::Complex ? m + n : 3 * m + n;
}

QuaternionicDimensionCheck quaternionic_dimension_check(int m, int n) {
  const int dim = 4 * n + 3 * (m - n);
  return {dim, m + n, dim != m + n};
}

std::vector<std::size_t> combinatorial_cell_counts(
    const combinatorics::SimplicialComplex& k, Flavor flavor) {
  const int m = k.vertex_count();
  const int sdim = sphere_cell_dim(flavor);
  const int ddim = disc_cell_dim(flavor);
  std::vector<std::size_t> counts;
  for (FaceMask f : all_faces_with_empty(k)) {
    const int size = std::popcount(f);
    for (int j = 0; j <= m - size; ++j) {
      const auto dim = static_cast<std::size_t>(size * ddim + j * sdim);
      if (counts.size() <= dim) counts.resize(dim + 1, 0);
      counts[dim] += binomial(static_cast<std::size_t>(m - size),
                              static_cast<std::size_t>(j));
    }
  }
  return counts;
}

}  // namespace qtoric::momentangle
