#ifndef SCHROCOUNT_ALGEBRA_HPP
#define SCHROCOUNT_ALGEBRA_HPP

// Exact arithmetic: rationals, dense univariate polynomials, sparse
// multivariate polynomials. Everything here is exact; floating point
// only ever appears in the roots module.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace schro {

using Int = mpz_class;
using Rat = mpq_class;

std::string rat_to_string(const Rat& r);

// Dense univariate polynomial over Q with a display-only variable name.
// coeffs_[i] is the coefficient of the i-th power; the highest stored
// coefficient is non-zero (zero polynomial stores nothing).
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c, std::string var = "q");
  Poly(std::vector<Rat> coeffs, std::string var = "q");

  // x^k with coefficient c.
  static Poly monomial(const Rat& c, int k, std::string var = "q");
  static Poly variable(std::string var = "q") { return monomial(1, 1, std::move(var)); }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is absent rather than a sentinel integer.
  std::optional<int> degree() const;
  const Rat& coeff(int i) const;  // 0 outside the stored range
  const std::string& var() const { return var_; }
  void set_var(std::string v) { var_ = std::move(v); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_integral() const;  // all coefficients have denominator 1

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, Poly p);
  friend Poly operator*(Poly p, const Rat& c) { return c * std::move(p); }
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(unsigned e) const;
  Poly shifted(int k) const;  // multiply by x^k, k >= 0

  Rat eval(const Rat& v) const;  // exact Horner

  // Canonical rendering: decreasing degree, explicit ^, no *,
  // e.g. q^4+2q^3+q^2+2q+1. Rational coefficients render as a/b.
  std::string to_string() const;
  // Parses the canonical grammar (whitespace tolerated). Throws
  // std::invalid_argument with a byte offset on malformed input.
  static Poly parse(const std::string& text, std::string var = "q");

 private:
  void normalize();
  std::vector<Rat> coeffs_;
  std::string var_ = "q";
};

// (-q)^n * p(1/q), multiplied out. Requires deg(p) <= n.
Poly poly_compose_reciprocal(const Poly& p, int n);

// Does a divide b exactly over the rationals? Returns the quotient when yes.
// a must be non-zero.
bool poly_divides(const Poly& a, const Poly& b, Poly* quotient = nullptr);

// Quotient and remainder of b / a over the rationals, a != 0.
std::pair<Poly, Poly> poly_divmod(const Poly& b, const Poly& a);

// Immutable ordered variable registry shared by MPoly values. Fixed per
// computation so exponent vectors never need reshaping mid-fold.
class VarSet {
 public:
  VarSet();  // empty registry
  static VarSet make(std::vector<std::string> names);
  size_t size() const { return names_->size(); }
  const std::string& name(size_t i) const { return (*names_)[i]; }
  int index_of(const std::string& name) const;  // -1 when absent
  bool same_as(const VarSet& o) const { return names_ == o.names_ || *names_ == *o.names_; }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Sparse multivariate polynomial over Q on a fixed registry. Terms are kept
// in an ordered map over exponent vectors; no zero coefficient is stored.
class MPoly {
 public:
  using Exps = std::vector<uint32_t>;

  MPoly() = default;
  explicit MPoly(VarSet vars);
  MPoly(VarSet vars, const Rat& constant);

  static MPoly variable(const VarSet& vars, const std::string& name);
  static MPoly monomial(const VarSet& vars, const Exps& e, const Rat& c);
  static MPoly from_poly(const VarSet& vars, const Poly& p, const std::string& var);

  const VarSet& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Exps, Rat>& terms() const { return terms_; }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
  friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rat& c, MPoly p);
  friend MPoly operator*(MPoly p, const Rat& c) { return c * std::move(p); }
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly pow(unsigned e) const;

  // Coefficient of var^k, collected over all other variables.
  MPoly coeff_of(const std::string& var, uint32_t k) const;
  uint32_t max_degree(const std::string& var) const;

  // Substitute a polynomial value for one variable (exact expansion).
  MPoly substituted(const std::string& var, const MPoly& value) const;
  MPoly substituted(const std::string& var, const Rat& value) const;

  // View as univariate in `var`; fails if any other variable occurs.
  Poly to_poly(const std::string& var) const;
  Rat constant_value() const;  // fails if any variable occurs

  // Canonical rendering: terms in descending lexicographic exponent order
  // (registry order gives variable significance), same coefficient
  // conventions as Poly.
  std::string to_string() const;

 private:
  void add_term(const Exps& e, const Rat& c);
  VarSet vars_;
  std::map<Exps, Rat> terms_;
  friend MPoly mpoly_mul_impl(const MPoly&, const MPoly&);
};

// Both arguments regarded as polynomials in the distinguished variable
// tvar with MPoly coefficients; returns the scalar product of the two
// coefficient vectors, sum_i z_i * b_i.
MPoly mpoly_scalar_product(const MPoly& z, const MPoly& b, const std::string& tvar = "t");

// Exact division of p by the linear univariate (var - root); returns
// nothing when the division leaves a remainder.
std::optional<MPoly> mpoly_divexact_linear(const MPoly& p, const std::string& var, const Rat& root);

}  // namespace schro

#endif
