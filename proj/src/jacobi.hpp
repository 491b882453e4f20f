#ifndef SCHROCOUNT_JACOBI_HPP
#define SCHROCOUNT_JACOBI_HPP

// Refinement of the Schrodinger count over odd-characteristic fields by the
// Jacobi classes (zero / non-zero square / non-square) of the diagonal
// entries. States are 3x3 matrices nu(A,B) counting operators whose
// determinant has the shape alpha*x + beta with alpha in the row class and
// beta in the column class; rows and columns are ordered O, S, N. The
// vertex-indexed product, edge map and finals below make this a coloured
// local invariant whose defining exchange identity holds for a much wider
// parameter range than the counting specialization needs.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "gf.hpp"
#include "tree.hpp"

namespace schro {

// 3x3 state with a common denominator (q-1)^k shared by all nine entries.
// Cells are stored row-major; nu(O,O) is carried only for consistency
// checks and never contributes to counts.
struct NuMatrix {
  std::array<MPoly, 9> cell;
  unsigned k = 0;
  MPoly& at(int r, int c) { return cell[3 * r + c]; }
  const MPoly& at(int r, int c) const { return cell[3 * r + c]; }
};

// Per-vertex parameters. eps and qv are free in the general identity;
// s, x, y mark the three diagonal classes at the vertex. qtilde = 2q - qv
// is implied.
struct JacobiVertexParams {
  MPoly eps, qv, s, x, y;
};

// Formula engine over a fixed registry that must contain the global
// variable "q". All forms are transcribed once, symbolically; numeric runs
// substitute into the result.
class JacobiCalculus {
 public:
  explicit JacobiCalculus(VarSet vars);

  const VarSet& vars() const { return vars_; }

  NuMatrix identity() const;  // single 1 in cell (S, O)

  // Commutative, associative vertex product m_v.
  NuMatrix product(const JacobiVertexParams& p, const NuMatrix& A, const NuMatrix& B) const;

  // Edge map e_v; the index is the root of the subtree being attached.
  NuMatrix edge(const JacobiVertexParams& p, const NuMatrix& A) const;

  // Finals: fs sums the S-row of edge(p, A), fn the N-row, f = fs + fn.
  // All three share the denominator (q-1)^k.
  struct Finals {
    MPoly f, fs, fn;
    unsigned k = 0;
  };
  Finals finals(const JacobiVertexParams& p, const NuMatrix& A) const;

  // Reduce the denominator power as far as exact division by (q-1) allows.
  void normalize(NuMatrix& M) const;
  void normalize_scalar(MPoly& num, unsigned& k) const;

  bool equal(NuMatrix A, NuMatrix B) const;
  bool scalar_equal(MPoly n1, unsigned k1, MPoly n2, unsigned k2) const;

 private:
  VarSet vars_;
  MPoly q_, one_;
};

// Counting fold of a tree with the field-size variable kept symbolic and
// per-vertex markers s<i>, x<i>, y<i> (preorder index i). eps must be +1 or
// -1; the result is valid for every odd prime power q with q = eps mod 4.
struct JacobiFold {
  VarSet vars;
  std::vector<JacobiVertexParams> params;  // one per preorder vertex
  NuMatrix root;                           // folded state before the finals
  MPoly fs, fn;                            // finals, over (q-1)^k
  unsigned k = 0;
  int n = 0;
};
JacobiFold jacobi_fold_counting(const RootedTree& t, int eps);

// Per-pattern counts over a concrete field. Patterns are strings over
// {'z','s','n'} (zero, square, non-square diagonal entry), one character
// per vertex in preorder of the input term. Throws on even characteristic.
struct JacobiCounts {
  int n = 0;
  uint32_t q = 0;
  int eps = 0;
  std::map<std::string, std::pair<Int, Int>> by_pattern;  // (square det, non-square det)
  Int total() const;
};
JacobiCounts jacobi_count(const RootedTree& t, const GfField& F);

// Exchange-identity reports. f must hold everywhere; fs / fn only hold
// under special parameter choices.
struct JacobiIdentityReport {
  int samples = 0;
  int f_failures = 0;
  int fs_failures = 0;
  int fn_failures = 0;
};
// Random rational parameters at both vertices, random integer matrices.
JacobiIdentityReport jacobi_identity_check_random(int samples, unsigned seed);
// Fully symbolic parameters (11 variables), random integer matrices.
JacobiIdentityReport jacobi_identity_check_symbolic(int samples, unsigned seed);

// The four restricted parameter families under which fs or fn alone still
// satisfies the exchange identity, evaluated alongside the generic case.
struct JacobiSpecialCase {
  std::string name;
  JacobiIdentityReport report;
};
std::vector<JacobiSpecialCase> jacobi_special_identities(int samples = 20, unsigned seed = 7);

// Convolution check of the square/non-square addition rules in the group
// algebra of (F_q, +): products of the uniform measures on {0}, squares and
// non-squares decompose with the exact mixture coefficients used by the
// formula engine. Throws on even characteristic.
bool jacobi_addition_table_check(const GfField& F);

}  // namespace schro

#endif
