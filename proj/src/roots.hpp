#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "algebra.hpp"
#include "tree.hpp"

namespace schro {

/* Floating-point root analysis of the counting polynomials, with a
   residual certificate on every numeric root and exact rational
   bisection where floating point would be fragile. */

// All deg(p) complex roots. Simultaneous (Aberth) iteration from a ring
// of initial guesses; each returned root r satisfies the residual bound
// |p(r)| <= tol * (sum of |coefficients|) * max(1, |r|)^deg.
// Throws std::runtime_error when a root cannot be certified.
std::vector<std::complex<double>> poly_roots(const Poly& p, double tol = 1e-8);

// Where the roots of the counting polynomial of a tree lie. Roots within
// `tol` of the unit circle count as on_circle (this takes precedence);
// remaining roots within `tol` of the negative real axis count as
// negative_real; anything else is a violation.
struct RootLocusReport {
  int on_circle = 0;
  int negative_real = 0;
  std::vector<std::complex<double>> violations;
};
RootLocusReport root_locus_check(const Graph& g, double tol = 1e-8);

// Most negative real root of p, located by scanning for the leftmost
// sign change and shrinking the bracket by exact rational bisection
// (integer sign evaluations, no rounding). Empty when p has no real
// root below zero. Roots of even multiplicity produce no sign change
// and are not found; the counting polynomials used here have simple
// extreme negative roots.
std::optional<double> most_negative_real_root(const Poly& p, double width = 1e-9);

// For each entry of parts_list: subdivide every edge of the tree into
// that many parts, fold the counting polynomial, and report its most
// negative real root. As parts grows the sequence approaches 1 - deg(v)
// for a chosen vertex v of degree >= 3.
std::vector<double> subdivision_limit_study(const Graph& g, int v,
                                            const std::vector<int>& parts_list);

// Limit values recoverable from the weighted counting polynomial: the
// reciprocals of its real roots strictly inside (-1, 0), reported as
// values below -1 in increasing order. Checks that every other root has
// modulus >= 1 - tol and throws std::runtime_error otherwise.
std::vector<double> q_limit_roots(const RootedTree& t, double tol = 1e-8);

}  // namespace schro
