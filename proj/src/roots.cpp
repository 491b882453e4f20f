#include "roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "invariant.hpp"

namespace schro {

namespace {

using cd = std::complex<double>;

// Horner evaluation of p and p' at z.
std::pair<cd, cd> eval_with_derivative(const std::vector<cd>& c, cd z) {
  cd p(0.0, 0.0), d(0.0, 0.0);
  for (size_t i = c.size(); i-- > 0;) {
    d = d * z + p;
    p = p * z + c[i];
  }
  return {p, d};
}

Poly derivative(const Poly& p) {
  auto deg = p.degree();
  Poly out(Rat(0), p.var());
  if (!deg) return out;
  for (int i = 1; i <= *deg; ++i)
    out += Poly::monomial(p.coeff(i) * Rat(i), i - 1, p.var());
  return out;
}

Poly make_monic(const Poly& p) {
  auto deg = p.degree();
  if (!deg) return p;
  Rat lead = p.coeff(*deg);
  Poly out(Rat(0), p.var());
  for (int i = 0; i <= *deg; ++i)
    out += Poly::monomial(p.coeff(i) / lead, i, p.var());
  return out;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    auto [quot, rem] = poly_divmod(a, b);
    (void)quot;
    a = b;
    b = rem;
  }
  return make_monic(a);
}

// Yun's square-free decomposition: factors with their multiplicities,
// exact over the rationals. Multiple roots are then found as simple
// roots of their factor, which keeps the iteration quadratic.
std::vector<std::pair<Poly, int>> square_free_parts(const Poly& p) {
  std::vector<std::pair<Poly, int>> parts;
  Poly dp = derivative(p);
  Poly a = poly_gcd(p, dp);
  if (auto d = a.degree(); d && *d == 0) {
    parts.emplace_back(make_monic(p), 1);
    return parts;
  }
  auto [b0, rb] = poly_divmod(p, a);
  auto [c0, rc] = poly_divmod(dp, a);
  Poly b = b0, c = c0;
  int mult = 1;
  while (true) {
    Poly d = c - derivative(b);
    if (d.is_zero()) {
      if (auto db = b.degree(); db && *db > 0) parts.emplace_back(make_monic(b), mult);
      break;
    }
    Poly f = poly_gcd(b, d);
    if (auto df = f.degree(); df && *df > 0) parts.emplace_back(f, mult);
    auto [bn, rbn] = poly_divmod(b, f);
    auto [cn, rcn] = poly_divmod(d, f);
    b = bn;
    c = cn;
    ++mult;
    if (auto db = b.degree(); !db || *db == 0) break;
  }
  return parts;
}

}  // namespace

namespace {

// Simultaneous iteration on a square-free polynomial given by complex
// coefficients, constant term first. Returns deg roots.
std::vector<cd> aberth(const std::vector<cd>& c) {
  const size_t n = c.size() - 1;
  std::vector<cd> z(n);
  if (n == 0) return z;
  double bound = 0.0;
  for (size_t i = 0; i < n; ++i)
    bound = std::max(bound, std::abs(c[i] / c[n]));
  bound = 1.0 + bound;
  for (size_t i = 0; i < n; ++i) {
    double angle = 2.39996322972865332 * static_cast<double>(i) + 0.7;
    z[i] = std::polar(0.8 * bound, angle);
  }
  for (int iter = 0; iter < 400; ++iter) {
    double moved = 0.0;
    for (size_t i = 0; i < n; ++i) {
      auto [pv, dv] = eval_with_derivative(c, z[i]);
      if (std::abs(pv) == 0.0) continue;
      cd ratio = dv == cd(0.0, 0.0) ? cd(0.0, 0.0) : pv / dv;
      cd sum(0.0, 0.0);
      for (size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      cd denom = 1.0 - ratio * sum;
      cd step = denom == cd(0.0, 0.0) ? ratio : ratio / denom;
      z[i] -= step;
      moved = std::max(moved, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (moved < 1e-14) break;
  }
  return z;
}

std::vector<cd> complex_coefficients(const Poly& p) {
  auto deg = p.degree();
  std::vector<cd> c(static_cast<size_t>(*deg) + 1);
  for (int i = 0; i <= *deg; ++i)
    c[static_cast<size_t>(i)] = cd(p.coeff(i).get_d(), 0.0);
  return c;
}

}  // namespace

std::vector<std::complex<double>> poly_roots(const Poly& p, double tol) {
  auto deg = p.degree();
  if (!deg) throw std::invalid_argument("the zero polynomial has no root set");
  if (*deg == 0) return {};

  std::vector<cd> roots;
  for (const auto& [factor, mult] : square_free_parts(p)) {
    for (cd r : aberth(complex_coefficients(factor)))
      for (int i = 0; i < mult; ++i) roots.push_back(r);
  }

  const std::vector<cd> pc = complex_coefficients(p);
  double norm1 = 0.0;
  for (cd v : pc) norm1 += std::abs(v);
  for (cd r : roots) {
    auto [pv, dv] = eval_with_derivative(pc, r);
    (void)dv;
    double allowed =
        tol * norm1 * std::pow(std::max(1.0, std::abs(r)), static_cast<double>(*deg));
    if (std::abs(pv) > allowed)
      throw std::runtime_error("root finder failed to certify a root (residual " +
                               std::to_string(std::abs(pv)) + ")");
  }
  if (roots.size() != static_cast<size_t>(*deg))
    throw std::runtime_error("square-free decomposition lost roots");
  return roots;
}

RootLocusReport root_locus_check(const Graph& g, double tol) {
  Poly s = schrodinger_poly(g);
  RootLocusReport report;
  for (cd r : poly_roots(s, tol)) {
    if (std::abs(std::abs(r) - 1.0) <= tol)
      ++report.on_circle;
    else if (std::abs(r.imag()) <= tol && r.real() < 0.0)
      ++report.negative_real;
    else
      report.violations.push_back(r);
  }
  return report;
}

namespace {

// Sign of p at the rational point num/den (den > 0), computed exactly:
// sign of sum_i c_i num^i den^(deg - i) over the integers. The
// polynomials fed in have integer coefficients; a rational coefficient
// is cleared by the common denominator (which does not change signs).
int sign_at(const std::vector<Int>& coeff, const Int& num, const Int& den) {
  Int acc = 0;
  Int num_pow = 1;
  std::vector<Int> den_pow(coeff.size());
  if (!coeff.empty()) {
    den_pow[coeff.size() - 1] = 1;
    for (size_t i = coeff.size() - 1; i-- > 0;) den_pow[i] = den_pow[i + 1] * den;
  }
  for (size_t i = 0; i < coeff.size(); ++i) {
    acc += coeff[i] * num_pow * den_pow[i];
    num_pow *= num;
  }
  return sgn(acc);
}

std::vector<Int> integer_coefficients(const Poly& p) {
  auto deg = p.degree();
  if (!deg) return {};
  Int common = 1;
  for (int i = 0; i <= *deg; ++i) {
    Int den = p.coeff(i).get_den();
    common = common / gcd(common, den) * den;
  }
  std::vector<Int> out(static_cast<size_t>(*deg) + 1);
  for (int i = 0; i <= *deg; ++i) {
    Rat scaled = p.coeff(i) * Rat(common);
    out[static_cast<size_t>(i)] = Int(scaled.get_num());
  }
  return out;
}

}  // namespace

std::optional<double> most_negative_real_root(const Poly& p, double width) {
  std::vector<Int> coeff = integer_coefficients(p);
  if (coeff.size() < 2) return std::nullopt;

  // Cauchy bound, rounded up to an integer.
  double bound = 0.0;
  for (size_t i = 0; i + 1 < coeff.size(); ++i)
    bound = std::max(bound, std::abs(coeff[i].get_d() / coeff.back().get_d()));
  Int b(static_cast<long>(std::ceil(bound)) + 2);

  // Leftmost sign change on a grid of step 1/8 over [-b, 0].
  const Int grid_den = 8;
  Int lo_num = -b * grid_den;
  Int lo_den = grid_den;
  int lo_sign = sign_at(coeff, lo_num, lo_den);
  Int hi_num;
  bool found = false;
  for (Int k = lo_num + 1; k <= 0; ++k) {
    int s = sign_at(coeff, k, grid_den);
    if (s == 0) {
      // Grid point is itself a root; report it if negative.
      if (k < 0) {
        Rat exact(k, grid_den);
        exact.canonicalize();
        return exact.get_d();
      }
      return std::nullopt;
    }
    if (lo_sign != 0 && s != lo_sign) {
      hi_num = k;
      found = true;
      break;
    }
    lo_num = k;
    lo_sign = s;
  }
  if (!found) return std::nullopt;

  // Exact rational bisection of [lo_num/den, hi_num/den].
  Rat lo(lo_num, grid_den), hi(hi_num, grid_den);
  lo.canonicalize();
  hi.canonicalize();
  int steps = static_cast<int>(std::ceil(std::log2(0.125 / width))) + 1;
  for (int i = 0; i < steps; ++i) {
    Rat mid = (lo + hi) / 2;
    int s = sign_at(coeff, Int(mid.get_num()), Int(mid.get_den()));
    if (s == 0) return mid.get_d();
    if (s == lo_sign)
      lo = mid;
    else
      hi = mid;
  }
  Rat mid = (lo + hi) / 2;
  return mid.get_d();
}

std::vector<double> subdivision_limit_study(const Graph& g, int v,
                                            const std::vector<int>& parts_list) {
  if (!g.is_tree()) throw std::invalid_argument("subdivision study expects a tree");
  if (v < 0 || v >= g.n || g.degrees()[static_cast<size_t>(v)] < 3)
    throw std::invalid_argument("choose a vertex of degree at least 3");
  std::vector<double> out;
  for (int parts : parts_list) {
    if (parts < 1) throw std::invalid_argument("parts must be positive");
    Graph current = g;
    // Subdividing appends fresh vertices, so the original edge list stays
    // addressable while every original edge is split.
    std::vector<std::pair<int, int>> original = g.edges;
    for (auto e : original) current = subdivide(current, e, parts);
    Poly s = schrodinger_poly(current);
    auto root = most_negative_real_root(s);
    if (!root) throw std::runtime_error("subdivided tree lost its negative root");
    out.push_back(*root);
  }
  return out;
}

std::vector<double> q_limit_roots(const RootedTree& t, double tol) {
  Poly q = q_tree_poly(t);
  std::vector<double> limits;
  for (cd r : poly_roots(q, tol)) {
    if (std::abs(r.imag()) <= tol && r.real() > -1.0 + tol && r.real() < -tol) {
      limits.push_back(1.0 / r.real());
      continue;
    }
    if (std::abs(r) < 1.0 - tol)
      throw std::runtime_error("unexpected small root of the weighted polynomial");
  }
  std::sort(limits.begin(), limits.end());
  return limits;
}

}  // namespace schro
