#pragma once

#include <array>
#include <string>
#include <vector>

#include "plumb/inertia.hpp"
#include "plumb/matrix.hpp"
#include "plumb/tree.hpp"

namespace plumb {

// Symmetric integer bilinear form.
struct SymmetricForm {
  IntMatrix entries;

  SymmetricForm() : entries(0, 0) {}
  explicit SymmetricForm(IntMatrix m);  // validates symmetry

  int dimension() const { return entries.rows(); }
};

// Square integer matrix A, generally asymmetric, with A + A^T symmetric
// by construction wherever it is produced here.
struct SeifertMatrix {
  IntMatrix entries;

  SeifertMatrix() : entries(0, 0) {}
  explicit SeifertMatrix(IntMatrix m);  // validates squareness

  int dimension() const { return entries.rows(); }
};

Inertia inertia(const SymmetricForm& s);
int signature(const SymmetricForm& s);

// Intersection form of a plumbing forest: diagonal 2, entry 1 on edges,
// block-diagonal across components.
SymmetricForm symmetrized_form(const Forest& f);
SymmetricForm symmetrized_form(const Tree& t);

// Coxeter bilinear form: diagonal -2, entry 1 on edges.
SymmetricForm coxeter_form(const Forest& f);
SymmetricForm coxeter_form(const Tree& t);

// Asymmetric lift with unit diagonal: edges oriented away from vertex 0
// (per component), A[parent][child] = 1.  A + A^T = symmetrized_form.
SeifertMatrix seifert_matrix(const Tree& t);
SeifertMatrix seifert_matrix(const Forest& f);

// Lift of an arbitrary even-diagonal symmetric form: half the diagonal plus
// the strict upper triangle.  Errors on odd diagonal entries.
SeifertMatrix upper_seifert_lift(const SymmetricForm& s);

struct SpiralBlocks {
  IntMatrix a, b, d;
};

// Blocks of the spiral-divide family: a = 2I; b unit upper triangular with
// 2 on the first and 1 on the second superdiagonal; d symmetric tridiagonal
// with diagonal 2 and off-diagonal (1, 2, 2, ...).
SpiralBlocks spiral_blocks(int n);

// The 2n x 2n form [[a, b], [b^T, d]].
SymmetricForm spiral_form(int n);

struct DivideCombinatorics {
  int double_points = 0;
  int inner_faces = 0;
  // (face, face, multiplicity) with face indices distinct, and
  // (double point, face, multiplicity); unordered pairs, each at most once.
  std::vector<std::array<int, 3>> face_face;
  std::vector<std::array<int, 3>> dp_face;
};

// Text format: "dp <d>", "faces <f>", then lines "ff i j n" / "df k j n".
DivideCombinatorics parse_divide(const std::string& text);

// Basis ordered double points first, then faces, in declaration order;
// diagonal 2, adjacency multiplicities off-diagonal, 0 between double
// points.  Signature does not depend on the ordering choice.
SymmetricForm divide_form(const DivideCombinatorics& dc);

// Symmetric bordering by one curve: new last row/column = coupling, new
// diagonal entry = self_pairing.
SymmetricForm plumb_band(const SymmetricForm& s,
                         const std::vector<mpz_class>& coupling,
                         const mpz_class& self_pairing = 2);

// Bordering by a trefoil fiber: two new curves with block [[2,1],[1,2]];
// only the first couples to the old surface.
SymmetricForm plumb_trefoil(const SymmetricForm& s,
                            const std::vector<mpz_class>& coupling);

// The 4x4 slalom-divide form with rows (2,1,3,2),(1,2,2,3),(3,2,2,4),
// (2,3,4,2); signature 0.
SymmetricForm example1_form();

}  // namespace plumb
