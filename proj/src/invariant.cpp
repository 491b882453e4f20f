#include "invariant.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace schro {

namespace {

Poly qvar() { return Poly::variable("q"); }
Poly xvar() { return Poly::variable("x"); }

// Exact division by x^k; the low-order coefficients must be zero.
Poly shift_down(const Poly& p, int k) {
  if (p.is_zero()) return p;
  for (int i = 0; i < k; ++i)
    if (p.coeff(i) != 0) throw std::logic_error("inexact division by variable power");
  std::vector<Rat> out;
  for (int i = k; i <= p.degree().value_or(-1); ++i) out.push_back(p.coeff(i));
  return Poly(std::move(out), p.var());
}

}  // namespace

InvariantAlgebra<PairInv, Poly> independence_algebra() {
  InvariantAlgebra<PairInv, Poly> alg;
  alg.name = "independence";
  alg.leaf = [](const std::string&) { return PairInv{Poly(Rat(1), "x"), xvar()}; };
  alg.edge = [](const PairInv& A, const std::string&) {
    return PairInv{A.a + A.b, xvar() * A.a};
  };
  // Both b components carry a factor x (sets containing their root), so the
  // division below is exact.
  alg.merge = [](const PairInv& A, const PairInv& B, const std::string&) {
    return PairInv{A.a * B.a, shift_down(A.b * B.b, 1)};
  };
  alg.finish = [](const PairInv& A, const std::string&) { return A.a + A.b; };
  return alg;
}

InvariantAlgebra<PairInv, Poly> matching_algebra() {
  InvariantAlgebra<PairInv, Poly> alg;
  alg.name = "matching";
  alg.leaf = [](const std::string&) { return PairInv{Poly(Rat(1), "x"), Poly(Rat(0), "x")}; };
  alg.edge = [](const PairInv& A, const std::string&) {
    return PairInv{A.a + A.b, xvar() * A.a};
  };
  alg.merge = [](const PairInv& A, const PairInv& B, const std::string&) {
    return PairInv{A.a * B.a, A.a * B.b + A.b * B.a};
  };
  alg.finish = [](const PairInv& A, const std::string&) { return A.a + A.b; };
  return alg;
}

InvariantAlgebra<PairInv, Poly> charpoly_algebra() {
  InvariantAlgebra<PairInv, Poly> alg;
  alg.name = "charpoly";
  alg.leaf = [](const std::string&) { return PairInv{Poly(Rat(1), "x"), Poly(Rat(0), "x")}; };
  alg.edge = [](const PairInv& A, const std::string&) {
    return PairInv{xvar() * A.a - A.b, A.a};
  };
  alg.merge = [](const PairInv& A, const PairInv& B, const std::string&) {
    return PairInv{A.a * B.a, A.a * B.b + A.b * B.a};
  };
  alg.finish = [](const PairInv& A, const std::string&) { return xvar() * A.a - A.b; };
  return alg;
}

InvariantAlgebra<PairInv, Poly> schrodinger_algebra() {
  InvariantAlgebra<PairInv, Poly> alg;
  alg.name = "schrodinger";
  alg.leaf = [](const std::string&) { return PairInv{Poly(Rat(1), "q"), Poly(Rat(0), "q")}; };
  alg.edge = [](const PairInv& A, const std::string&) {
    return PairInv{(qvar() - Poly(Rat(1), "q")) * A.a + qvar() * A.b, A.a};
  };
  alg.merge = [](const PairInv& A, const PairInv& B, const std::string&) {
    return PairInv{A.a * B.a, A.a * B.b + A.b * B.a};
  };
  alg.finish = [](const PairInv& A, const std::string&) {
    return (qvar() - Poly(Rat(1), "q")) * A.a + qvar() * A.b;
  };
  return alg;
}

Poly independence_poly(const Graph& g) { return run_tree(independence_algebra(), g); }
Poly matching_poly(const Graph& g) { return run_tree(matching_algebra(), g); }
Poly charpoly_adjacency(const Graph& g) { return run_tree(charpoly_algebra(), g); }
Poly schrodinger_poly(const Graph& g) { return run_tree(schrodinger_algebra(), g); }

namespace {

struct TripleInv {
  Poly a, b, c;
  bool operator==(const TripleInv&) const = default;
};

// The Laplacian triple: the third slot accumulates the degree of the root.
InvariantAlgebra<TripleInv, Poly> laplacian_algebra() {
  InvariantAlgebra<TripleInv, Poly> alg;
  alg.name = "laplacian";
  alg.leaf = [](const std::string&) {
    return TripleInv{Poly(Rat(1), "x"), Poly(Rat(0), "x"), Poly(Rat(0), "x")};
  };
  alg.edge = [](const TripleInv& A, const std::string&) {
    return TripleInv{-(xvar() + A.c + Poly(Rat(1), "x")) * A.a + A.b, -A.a, Poly(Rat(1), "x")};
  };
  alg.merge = [](const TripleInv& A, const TripleInv& B, const std::string&) {
    return TripleInv{A.a * B.a, A.a * B.b + A.b * B.a, A.c + B.c};
  };
  alg.finish = [](const TripleInv& A, const std::string&) { return -(xvar() + A.c) * A.a + A.b; };
  return alg;
}

}  // namespace

Poly charpoly_laplacian(const Graph& g) {
  Poly raw = run_tree(laplacian_algebra(), g);
  return (g.n % 2 == 0) ? raw : -raw;
}

namespace {

InvariantAlgebra<PairInv, Poly> theorem1_algebra() {
  InvariantAlgebra<PairInv, Poly> alg;
  alg.name = "theorem1";
  Poly one_minus_q = Poly(Rat(1), "q") - qvar();
  alg.leaf = [](const std::string&) { return PairInv{Poly(Rat(1), "q"), Poly(Rat(0), "q")}; };
  alg.edge = [one_minus_q](const PairInv& A, const std::string&) {
    return PairInv{one_minus_q * A.a + qvar() * A.b, A.a};
  };
  alg.merge = [](const PairInv& A, const PairInv& B, const std::string&) {
    return PairInv{A.a * B.a, A.a * B.b + A.b * B.a};
  };
  alg.finish = [one_minus_q](const PairInv& A, const std::string&) {
    return one_minus_q * A.a + qvar() * A.b;
  };
  return alg;
}

}  // namespace

Poly theorem1_rhs(const Graph& g) {
  Poly val = run_tree(theorem1_algebra(), g);
  return (g.n % 2 == 0) ? val : -val;
}

Poly theorem1_rhs_via_charpoly(const Graph& g) {
  Poly chi = charpoly_adjacency(g);
  int n = g.n;
  // n * chi(w + 1/w) * w^n as an honest polynomial in w.
  Poly w = Poly::variable("w");
  Poly w2p1 = w * w + Poly(Rat(1), "w");
  Poly acc(Rat(0), "w");
  for (int k = 0; k <= n; ++k) {
    const Rat& c = chi.coeff(k);
    if (c == 0) continue;
    acc += c * (w2p1.pow(k) * Poly::monomial(1, n - k, "w"));
  }
  // Substituting w^2 -> -q must kill every odd power: trees are bipartite,
  // so chi only has terms of degree n mod 2.
  std::vector<Rat> qc;
  for (int i = 0; i <= acc.degree().value_or(-1); ++i) {
    if (i % 2 == 1) {
      if (acc.coeff(i) != 0) throw std::logic_error("theorem1_rhs_via_charpoly: odd w-part survives");
      continue;
    }
    int j = i / 2;
    if (static_cast<int>(qc.size()) <= j) qc.resize(j + 1, Rat(0));
    qc[j] = (j % 2 == 0 ? acc.coeff(i) : -acc.coeff(i));
  }
  Poly out(std::move(qc), "q");
  return (n % 2 == 0) ? out : -out;
}

namespace {

// Carrier for the Z-series invariant: strata[i] is the t^i coefficient,
// with a fixed stratum count so the product truncation is uniform.
struct ZCarrier {
  std::vector<MPoly> strata;
  bool operator==(const ZCarrier&) const = default;
};

}  // namespace

MPoly z_series_invariant(const Graph& g, const MPoly& Z, const std::string& tvar) {
  const size_t cap = static_cast<size_t>(g.n) + 1;
  const VarSet& vars = Z.vars();
  std::vector<MPoly> zc(cap + 1, MPoly(vars));
  uint32_t zd = Z.max_degree(tvar);
  for (uint32_t i = 0; i <= zd && i <= cap; ++i) zc[i] = Z.coeff_of(tvar, i);

  auto scalar = [&](const ZCarrier& A) {
    MPoly s(vars);
    for (size_t i = 0; i < A.strata.size(); ++i) s += zc[i] * A.strata[i];
    return s;
  };

  InvariantAlgebra<ZCarrier, MPoly> alg;
  alg.name = "zseries";
  alg.leaf = [&](const std::string&) {
    ZCarrier c{std::vector<MPoly>(cap + 1, MPoly(vars))};
    c.strata[0] = MPoly(vars, Rat(1));
    return c;
  };
  alg.edge = [&](const ZCarrier& A, const std::string&) {
    ZCarrier c{std::vector<MPoly>(cap + 1, MPoly(vars))};
    c.strata[0] = scalar(A);
    for (size_t i = 0; i + 1 <= cap; ++i) c.strata[i + 1] += A.strata[i];
    return c;
  };
  alg.merge = [&](const ZCarrier& A, const ZCarrier& B, const std::string&) {
    ZCarrier c{std::vector<MPoly>(cap + 1, MPoly(vars))};
    for (size_t i = 0; i <= cap; ++i) {
      if (A.strata[i].is_zero()) continue;
      for (size_t j = 0; i + j <= cap; ++j) c.strata[i + j] += A.strata[i] * B.strata[j];
    }
    return c;
  };
  alg.finish = [&](const ZCarrier& A, const std::string&) { return scalar(A); };
  return run_tree(alg, g);
}

MPoly z_series_full(const Graph& g) {
  std::vector<std::string> names;
  for (int i = 0; i < g.n; ++i) names.push_back("z" + std::to_string(i));
  names.push_back("t");
  VarSet vars = VarSet::make(std::move(names));
  MPoly Z(vars);
  for (int i = 0; i < g.n; ++i) {
    MPoly::Exps e(vars.size(), 0);
    e[i] = 1;
    e[vars.size() - 1] = static_cast<uint32_t>(i);
    Z += MPoly::monomial(vars, e, 1);
  }
  return z_series_invariant(g, Z, "t");
}

MPoly z_series_z01(const Graph& g) {
  VarSet vars = VarSet::make({"z0", "z1", "t"});
  MPoly Z = MPoly::variable(vars, "z0") + MPoly::variable(vars, "z1") * MPoly::variable(vars, "t");
  return z_series_invariant(g, Z, "t");
}

namespace {

// Coloured Schrodinger states (a, b, C): a = operators with zero diagonal
// at the root and non-zero pairing, b = non-zero diagonal and zero pairing,
// C = both non-zero, divided by its guaranteed factor q-1.
struct CTriple {
  MPoly a, b, C;
  bool operator==(const CTriple&) const = default;
};

struct ColouredAlgebraContext {
  VarSet vars;
  MPoly q, one;
  std::map<std::string, MPoly> colour_var;

  explicit ColouredAlgebraContext(const std::set<std::string>& colours) {
    std::vector<std::string> names = {"q"};
    for (const std::string& c : colours) {
      if (c == "q") throw std::invalid_argument("colour label 'q' collides with the field variable");
      names.push_back(c);
    }
    vars = VarSet::make(names);
    q = MPoly::variable(vars, "q");
    one = MPoly(vars, Rat(1));
    for (const std::string& c : colours) colour_var[c] = MPoly::variable(vars, c);
  }

  const MPoly& cvar(const std::string& c) const {
    auto it = colour_var.find(c);
    if (it == colour_var.end()) throw std::invalid_argument("unknown colour: " + c);
    return it->second;
  }

  InvariantAlgebra<CTriple, MPoly> algebra() const {
    InvariantAlgebra<CTriple, MPoly> alg;
    alg.name = "coloured_schrodinger";
    const MPoly& q_ = q;
    const MPoly& one_ = one;
    auto cv = [this](const std::string& c) -> const MPoly& { return cvar(c); };
    alg.leaf = [this](const std::string&) { return CTriple{MPoly(vars), MPoly(vars, Rat(1)), MPoly(vars)}; };
    alg.edge = [q_, one_, cv](const CTriple& A, const std::string& colour) {
      const MPoly& s = cv(colour);
      return CTriple{s * A.b + (q_ - one_) * A.C, (q_ - one_ + s) * A.a,
                     A.b + (q_ - one_ - one_ + s) * A.C};
    };
    alg.merge = [q_, one_](const CTriple& A, const CTriple& B, const std::string&) {
      return CTriple{A.a * B.b + A.b * B.a + (q_ - one_) * (A.a * B.C + A.C * B.a),
                     A.b * B.b + (q_ - one_) * (A.C * B.C),
                     A.b * B.C + A.C * B.b + (q_ - one_ - one_) * (A.C * B.C)};
    };
    alg.finish = [q_, one_, cv](const CTriple& A, const std::string& colour) {
      const MPoly& s = cv(colour);
      return (q_ - one_ + s) * A.a + (q_ - one_) * A.b + (q_ - one_ - one_ + s) * (q_ - one_) * A.C;
    };
    return alg;
  }
};

RootedTree default_coloured(const RootedTree& t) {
  RootedTree out = t;
  if (out.colour.empty()) out.colour = "c";
  for (RootedTree& c : out.children) c = default_coloured(c);
  return out;
}

void collect_colours(const RootedTree& t, std::set<std::string>& out) {
  out.insert(t.colour);
  for (const RootedTree& c : t.children) collect_colours(c, out);
}

}  // namespace

MPoly coloured_schrodinger_poly(const RootedTree& t0) {
  RootedTree t = default_coloured(t0);
  std::set<std::string> colours;
  collect_colours(t, colours);
  ColouredAlgebraContext ctx(colours);
  auto alg = ctx.algebra();
  return alg.finish(run_rooted(alg, t), t.colour);
}

namespace {

long long weight_of(const std::string& colour) {
  if (colour.empty()) return 0;
  size_t used = 0;
  long long w;
  try {
    w = std::stoll(colour, &used);
  } catch (...) {
    throw std::invalid_argument("vertex weight is not an integer: " + colour);
  }
  if (used != colour.size()) throw std::invalid_argument("vertex weight is not an integer: " + colour);
  if (w < 0) throw std::invalid_argument("vertex weight must be non-negative");
  return w;
}

// (q - 1 - kq) for vertex weight k.
Poly weighted_coeff(const std::string& colour) {
  Rat k(static_cast<long>(weight_of(colour)));
  return qvar() - Poly(Rat(1), "q") - Poly::monomial(k, 1, "q");
}

InvariantAlgebra<PairInv, Poly> q_tree_algebra() {
  InvariantAlgebra<PairInv, Poly> alg;
  alg.name = "qtree";
  alg.leaf = [](const std::string&) { return PairInv{Poly(Rat(1), "q"), Poly(Rat(0), "q")}; };
  // e_k(a,b) = ((q-1-kq)a + qb, a); weight k rides on the colour label.
  alg.edge = [](const PairInv& A, const std::string& colour) {
    return PairInv{weighted_coeff(colour) * A.a + qvar() * A.b, A.a};
  };
  alg.merge = [](const PairInv& A, const PairInv& B, const std::string&) {
    return PairInv{A.a * B.a, A.a * B.b + A.b * B.a};
  };
  alg.finish = [](const PairInv& A, const std::string& colour) {
    return weighted_coeff(colour) * A.a + qvar() * A.b;
  };
  return alg;
}

}  // namespace

Poly q_tree_poly(const RootedTree& t) {
  auto alg = q_tree_algebra();
  return alg.finish(run_rooted(alg, t), t.colour);
}

Poly q_tree_poly(const Graph& g) { return run_tree(q_tree_algebra(), g); }

void invariant_self_checks() {
  std::vector<RootedTree> plain = {
      parse_tree("V"), parse_tree("E(V)"), parse_tree("M{E(V),E(V)}"), parse_tree("E(E(V))"),
      parse_tree("M{E(E(V)),E(V)}")};
  check_algebra(independence_algebra(), plain);
  check_algebra(matching_algebra(), plain);
  check_algebra(charpoly_algebra(), plain);
  check_algebra(schrodinger_algebra(), plain);
  check_algebra(laplacian_algebra(), plain);
  check_algebra(theorem1_algebra(), plain);

  std::vector<RootedTree> weighted = {parse_tree("V:0"), parse_tree("E(V:2):1"),
                                      parse_tree("M{E(V:1),E(V:3)}"), parse_tree("E(E(V)):2")};
  check_algebra(q_tree_algebra(), weighted);

  std::vector<RootedTree> coloured;
  for (const char* s : {"V:s", "E(V:t):s", "M{E(V:s),E(V:u)}", "E(E(V:u):t):s"})
    coloured.push_back(default_coloured(parse_tree(s)));
  std::set<std::string> cols;
  for (const RootedTree& t : coloured) collect_colours(t, cols);
  ColouredAlgebraContext ctx(cols);
  check_algebra(ctx.algebra(), coloured);

  // Z-series with a 2-variable Z over a fixed stratum budget.
  Graph probe = tree_to_graph(parse_tree("M{E(E(V)),E(V),E(V)}"));
  MPoly full = z_series_full(probe);
  if (full.is_zero()) throw std::logic_error("zseries self-check produced zero");
}

}  // namespace schro
