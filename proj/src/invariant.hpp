#ifndef SCHROCOUNT_INVARIANT_HPP
#define SCHROCOUNT_INVARIANT_HPP

// Generic local-invariant engine over plug-in (v,e,m,f) algebras, and the
// built-in invariants it powers: independence and matching polynomials,
// adjacency/Laplacian characteristic polynomials, the Z-series family, the
// Schrodinger counting polynomial S_T, its characteristic-polynomial form,
// the coloured diagonal-zero refinement, and the weighted-tree limit
// polynomial Q_T.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "tree.hpp"

namespace schro {

// A local invariant: leaves map to v, an edge to the parent applies e
// (indexed by the colour of the child subtree's root), siblings combine
// with the commutative monoid product m (indexed by the colour of the
// vertex where the merge happens), and the unrooted value applies f
// (indexed by the root colour). Uncoloured algebras ignore the colour
// arguments.
template <typename T, typename R = T>
struct InvariantAlgebra {
  std::string name;
  std::function<T(const std::string& colour)> leaf;
  std::function<T(const T&, const std::string& colour)> edge;
  std::function<T(const T&, const T&, const std::string& colour)> merge;
  std::function<R(const T&, const std::string& colour)> finish;
};

template <typename T, typename R>
T run_rooted(const InvariantAlgebra<T, R>& alg, const RootedTree& t) {
  T acc = alg.leaf(t.colour);
  for (const RootedTree& child : t.children)
    acc = alg.merge(acc, alg.edge(run_rooted(alg, child), child.colour), t.colour);
  return acc;
}

template <typename T, typename R>
R run_tree(const InvariantAlgebra<T, R>& alg, const Graph& g, bool check_all_roots = false) {
  if (!g.is_tree()) throw std::invalid_argument(alg.name + ": input graph is not a tree");
  RootedTree r0 = reroot(g, 0);
  R value = alg.finish(run_rooted(alg, r0), r0.colour);
  if (check_all_roots) {
    for (int v = 1; v < g.n; ++v) {
      RootedTree rv = reroot(g, v);
      R other = alg.finish(run_rooted(alg, rv), rv.colour);
      if (!(other == value))
        throw std::logic_error(alg.name + ": value depends on the root (vertex " + std::to_string(v) + ")");
    }
  }
  return value;
}

// Sampled structural checks: m's identity element and the edge-exchange
// identity f(m(A,e(B))) = f(m(e(A),B)) over states folded from the given
// rooted trees. Throws std::logic_error on violation.
template <typename T, typename R>
void check_algebra(const InvariantAlgebra<T, R>& alg, const std::vector<RootedTree>& samples) {
  for (const RootedTree& ta : samples) {
    T a = run_rooted(alg, ta);
    const std::string& ca = ta.colour;
    if (!(alg.merge(alg.leaf(ca), a, ca) == a) || !(alg.merge(a, alg.leaf(ca), ca) == a))
      throw std::logic_error(alg.name + ": v is not a monoid identity");
    for (const RootedTree& tb : samples) {
      T b = run_rooted(alg, tb);
      const std::string& cb = tb.colour;
      R lhs = alg.finish(alg.merge(a, alg.edge(b, cb), ca), ca);
      R rhs = alg.finish(alg.merge(alg.edge(a, ca), b, cb), cb);
      if (!(lhs == rhs)) throw std::logic_error(alg.name + ": edge-exchange identity fails");
    }
  }
}

// Pair carrier shared by most univariate invariants.
struct PairInv {
  Poly a, b;
  bool operator==(const PairInv&) const = default;
};

InvariantAlgebra<PairInv, Poly> independence_algebra();   // pairs in x
InvariantAlgebra<PairInv, Poly> matching_algebra();       // pairs in x
InvariantAlgebra<PairInv, Poly> charpoly_algebra();       // pairs in x
InvariantAlgebra<PairInv, Poly> schrodinger_algebra();    // pairs in q

Poly independence_poly(const Graph& g);
Poly matching_poly(const Graph& g);
Poly charpoly_adjacency(const Graph& g);
// det(x Id + L) for the combinatorial Laplacian; the raw fold of the
// underlying triple algebra computes (-1)^n times this.
Poly charpoly_laplacian(const Graph& g);
Poly schrodinger_poly(const Graph& g);

// (-sqrt(-q))^n chi_T(sqrt(-q) + 1/sqrt(-q)) computed without radicals:
// the alternating-sign fold e(a,b)=((1-q)a+qb, a), f(a,b)=(1-q)a+qb
// evaluates (sqrt(-q))^n chi_T(sqrt(-q)+1/sqrt(-q)) exactly over Z[q],
// and the leading (-1)^n restores the sign of the prefactor.
Poly theorem1_rhs(const Graph& g);
// Same value through an independent route: expand chi_T under
// x -> w + 1/w, clear w-powers, substitute w^2 -> -q. The even/odd split
// must cancel exactly; used to cross-check theorem1_rhs.
Poly theorem1_rhs_via_charpoly(const Graph& g);

// Generic Z-series invariant. Z is a polynomial in `tvar` whose
// coefficients may involve further variables; products are truncated at
// t-degree 1 + vertex count.
MPoly z_series_invariant(const Graph& g, const MPoly& Z, const std::string& tvar = "t");
// Z = z0 + z1 t + ... + z_{n-1} t^{n-1} over a fresh registry z0..z_{n-1}.
MPoly z_series_full(const Graph& g);
// Z = z0 + z1 t over registry {z0, z1}.
MPoly z_series_z01(const Graph& g);

// Coloured Schrodinger refinement: an MPoly in q and one variable per
// colour label; the coefficient of prod c_j^(e_j) counts invertible
// Schrodinger operators whose diagonal vanishes at exactly e_j vertices of
// colour c_j. Vertices without a colour are treated as colour "c".
MPoly coloured_schrodinger_poly(const RootedTree& t);

// Q_T of an essentially finite tree encoded as a finite tree with
// non-negative integer vertex weights (given as colour labels; empty = 0).
Poly q_tree_poly(const RootedTree& t);
Poly q_tree_poly(const Graph& g);

// Runs the sampled self-checks of every built-in algebra; throws on any
// violation. Cheap enough to run at registry construction.
void invariant_self_checks();

}  // namespace schro

#endif
