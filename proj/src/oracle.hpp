#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "algebra.hpp"
#include "gf.hpp"
#include "tree.hpp"

namespace schro {

/* Brute-force ground truth and closed-form counters. The enumeration
   routines sweep every matrix in the family and count the invertible
   ones by Gaussian elimination over the field tables. */

// Default ceiling on the number of enumerated matrices.
inline constexpr double kOracleGuard = 1e8;

// Number of diagonal assignments D in F_q^n making A(g) + D invertible,
// A(g) the adjacency matrix. Throws std::invalid_argument when q^n
// exceeds the guard.
Int count_invertible_schrodinger(const Graph& g, const GfField& F,
                                 double guard = kOracleGuard);

// Number of invertible matrices with free diagonal entries, independent
// non-zero entries in both directions of every edge (a single shared
// non-zero entry per edge when `symmetric`), and zeros elsewhere.
// The guard bounds q^(n + 2|E|), or q^(n + |E|) when symmetric.
Int count_invertible_gmatrices(const Graph& g, const GfField& F, bool symmetric,
                               double guard = kOracleGuard);

// Census of all q^n Schrödinger operators, keyed by the diagonal's
// pattern string ('z' zero, 's' non-zero square, 'n' non-square, one
// character per vertex in vertex order). Each pattern maps to counts
// indexed by the determinant's class: [0] zero, [1] non-zero square,
// [2] non-square. Odd characteristic only.
std::map<std::string, std::array<Int, 3>> classified_schrodinger_census(
    const Graph& g, const GfField& F, double guard = kOracleGuard);

// The closed cycle-count forms depend on the parity of the field's
// characteristic; the two branches agree unless n = 2 (mod 4).
enum class CycleParity { OddChar, EvenChar };

// Invertible Schrödinger operators of the n-cycle, n >= 3, as a
// polynomial in q (the branch's validity: q odd / q even).
Poly cycle_count_poly(int n, CycleParity parity);
Int cycle_count_closed(int n, const GfField& F);

// The same count through the group ring: q^n minus the coefficient sum
// over matrices of trace 2*(-1)^n in the n-th power of the walk element
// (trivial subgroup).
Int cycle_count_via_groupring(int n, const GfField& F);

// Complete graph on n >= 1 vertices: ((q-1)^(n+1) + (-1)^n)/q + n(q-1)^(n-1).
Poly complete_poly(int n);
Int complete_count_closed(int n, const GfField& F);

// The derivation chain star + diagonal slice - centre-at-minus-one,
// kappa_n = S_star(n) + (q-1)^(n-1) - s_n with
// s_n = (n-1)(q-1)^(n-2) + ((q-1)^n - (-1)^n)/q. Equals complete_poly;
// exposed separately so the identity stays testable. n >= 2.
Poly complete_poly_via_chain(int n);

// Star on n >= 2 vertices (centre plus n-1 leaves):
// (q^2 + (n-3)q + 1)(q-1)^(n-2).
Poly star_poly(int n);

// Solutions of x_1 + ... + x_n != 0 over (F_q*)^n:
// beta_n = ((q-1)^(n+1) + (-1)^(n+1)(q-1))/q, n >= 0. Closed form and
// the recurrence beta_n = (q-1) alpha_{n-1} + (q-2) beta_{n-1} with
// alpha_n = beta_{n-1}, alpha_0 = 1, beta_0 = 0.
Poly beta_closed_poly(int n);
Poly beta_recurrence_poly(int n);

}  // namespace schro
