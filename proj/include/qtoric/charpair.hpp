#pragma once

#include <string>
#include <vector>

#include "qtoric/combinatorics.hpp"
#include "qtoric/int_matrix.hpp"

// Characteristic data over a simple polytope: integer characteristic
// matrices for torus actions and coordinate-label functors for the
// quaternionic case.
namespace qtoric::charpair {

using combinatorics::Face;
using combinatorics::SimplePolytope;

// n x m integer matrix; column i is the primitive vector of facet F_i.
class CharacteristicMatrix {
 public:
  CharacteristicMatrix(int n, int m, IntMatrix entries);
  static CharacteristicMatrix from_columns(const std::vector<IntVector>& columns);

  int n() const { return n_; }
  int m() const { return m_; }
  const IntMatrix& matrix() const { return entries_; }
  IntVector column(int facet) const;  // 1-based
  IntMatrix submatrix(const Face& facets) const;

  bool operator==(const CharacteristicMatrix&) const = default;

 private:
  int n_;
  int m_;
  IntMatrix entries_;
};

struct ColumnCheck {
  int facet;
  bool primitive;
};

struct VertexCheck {
  Face vertex;
  Integer determinant;
  bool ok;
};

struct FaceCheck {
  Face face;
  Integer minor_gcd;
  bool ok;
};

struct PairReport {
  bool valid = true;
  std::vector<ColumnCheck> columns;
  std::vector<VertexCheck> vertices;  // locally standard condition
  std::vector<FaceCheck> faces;       // lower faces, gcd of maximal minors
  std::vector<std::string> failures;  // human-readable, first failure first
};

PairReport validate_characteristic_pair(const SimplePolytope& p,
                                        const CharacteristicMatrix& l);

// Throws ValidationError carrying the first failure when the pair is invalid.
void require_valid_pair(const SimplePolytope& p, const CharacteristicMatrix& l);

struct IsotropyEntry {
  Face face;
  IntMatrix generators;  // n x |face|, the corresponding columns verbatim
};

// One entry per face of the polytope, polytope itself first.
std::vector<IsotropyEntry> canonical_model_table(const SimplePolytope& p,
                                                 const CharacteristicMatrix& l);

// Facet labels gamma_i, nonempty subsets of the acting coordinates
// {1..n_act}.
struct QuaternionicIsotropyFunctor {
  int n_act = 0;
  std::vector<Face> labels;  // labels[i-1] = gamma_i, sorted

  bool operator==(const QuaternionicIsotropyFunctor&) const = default;
};

struct DisjointnessCheck {
  Face vertex;
  bool disjoint;
};

struct FunctorReport {
  bool valid = true;
  std::vector<DisjointnessCheck> vertices;
  bool injective = true;
  std::vector<std::pair<Face, Face>> collisions;  // faces sharing a class
  std::vector<std::string> failures;
};

FunctorReport validate_quaternionic_functor(const SimplePolytope& p,
                                            const QuaternionicIsotropyFunctor& f);

void require_valid_functor(const SimplePolytope& p,
                           const QuaternionicIsotropyFunctor& f);

// Every pair of labels is disjoint or nested.
bool validate_global(const QuaternionicIsotropyFunctor& f);

// The class a face is sent to: its facets' labels, sorted.
std::vector<Face> face_label_tuple(const QuaternionicIsotropyFunctor& f,
                                   const Face& face);

// Standard data: CP^n (Delta^n with [I | -1]) and Hirzebruch surfaces on the
// square, [[1,0,-1,0],[0,1,a,-1]].
CharacteristicMatrix projective_space_matrix(int n);
CharacteristicMatrix hirzebruch_matrix(long a);

}  // namespace qtoric::charpair
