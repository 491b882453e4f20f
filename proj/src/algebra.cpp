#include "algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace schro {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << "/" << r.get_den();
  return os.str();
}

Poly::Poly(const Rat& c, std::string var) : var_(std::move(var)) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  normalize();
}

Poly Poly::monomial(const Rat& c, int k, std::string var) {
  if (k < 0) throw std::invalid_argument("monomial exponent must be non-negative");
  std::vector<Rat> cs(k + 1, Rat(0));
  cs[k] = c;
  return Poly(std::move(cs), std::move(var));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

const Rat& Poly::coeff(int i) const {
  static const Rat kZero(0);
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

bool Poly::is_integral() const {
  for (const Rat& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Rat& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(Rat(0), a.var_);
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out), a.var_);
}

Poly operator*(const Rat& c, Poly p) {
  if (c == 0) return Poly(Rat(0), p.var_);
  for (Rat& x : p.coeffs_) x *= c;
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly result(Rat(1), var_);
  Poly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return *this;
  std::vector<Rat> out(coeffs_.size() + k, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
  return Poly(std::move(out), var_);
}

Rat Poly::eval(const Rat& v) const {
  Rat acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
  return acc;
}

Poly poly_compose_reciprocal(const Poly& p, int n) {
  if (p.degree().value_or(0) > n)
    throw std::invalid_argument("poly_compose_reciprocal requires deg(p) <= n");
  // (-q)^n p(1/q) = (-1)^n sum_i c_i q^(n-i).
  std::vector<Rat> out(n + 1, Rat(0));
  Rat sign = (n % 2 == 0) ? 1 : -1;
  for (int i = 0; i <= n; ++i) out[n - i] = sign * p.coeff(i);
  return Poly(std::move(out), p.var());
}

std::pair<Poly, Poly> poly_divmod(const Poly& b, const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (b.is_zero()) return {Poly(Rat(0), b.var()), Poly(Rat(0), b.var())};
  int da = *a.degree();
  std::vector<Rat> rem = b.coeffs();
  int db = *b.degree();
  if (db < da) return {Poly(Rat(0), b.var()), b};
  std::vector<Rat> quot(db - da + 1, Rat(0));
  const Rat& lead = a.coeff(da);
  for (int i = db; i >= da; --i) {
    if (rem[i] == 0) continue;
    Rat f = rem[i] / lead;
    quot[i - da] = f;
    for (int j = 0; j <= da; ++j) rem[i - da + j] -= f * a.coeff(j);
  }
  return {Poly(std::move(quot), b.var()), Poly(std::move(rem), b.var())};
}

bool poly_divides(const Poly& a, const Poly& b, Poly* quotient) {
  if (a.is_zero()) throw std::invalid_argument("poly_divides: zero divisor");
  auto [q, r] = poly_divmod(b, a);
  if (!r.is_zero()) return false;
  if (quotient) *quotient = q;
  return true;
}

namespace {

// Renders one term given sign slot, |coefficient| and variable part.
void render_term(std::ostringstream& os, bool first, const Rat& c, const std::string& varpart) {
  Rat mag = c < 0 ? Rat(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? "-" : "+");
  }
  if (varpart.empty()) {
    os << rat_to_string(mag);
  } else {
    if (mag != 1) os << rat_to_string(mag);
    os << varpart;
  }
}

std::string power_string(const std::string& var, uint32_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    render_term(os, first, coeffs_[i], power_string(var_, static_cast<uint32_t>(i)));
    first = false;
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at byte " + std::to_string(pos) + ": " + what);
  }
};

Int parse_uint(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  if (c.pos == start) c.fail("expected digits");
  return Int(c.s.substr(start, c.pos - start));
}

}  // namespace

Poly Poly::parse(const std::string& text, std::string var) {
  Cursor c{text};
  Poly acc(Rat(0), var);
  if (c.done()) c.fail("empty input");
  bool first = true;
  while (!c.done()) {
    c.skip_ws();
    int sign = 1;
    if (c.s[c.pos] == '+' || c.s[c.pos] == '-') {
      sign = c.s[c.pos] == '-' ? -1 : 1;
      ++c.pos;
    } else if (!first) {
      c.fail("expected + or - between terms");
    }
    c.skip_ws();
    if (c.pos >= c.s.size()) c.fail("dangling sign");
    bool paren = false;
    if (c.s[c.pos] == '(') {
      paren = true;
      ++c.pos;
    }
    Rat coef(1);
    bool have_coef = false;
    c.skip_ws();
    if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
      Int num = parse_uint(c);
      Int den(1);
      c.skip_ws();
      if (c.pos < c.s.size() && c.s[c.pos] == '/') {
        ++c.pos;
        den = parse_uint(c);
        if (den == 0) c.fail("zero denominator");
      }
      coef = Rat(num, den);
      coef.canonicalize();
      have_coef = true;
    }
    if (paren) {
      c.skip_ws();
      if (c.pos >= c.s.size() || c.s[c.pos] != ')') c.fail("expected )");
      ++c.pos;
    }
    c.skip_ws();
    if (c.pos < c.s.size() && c.s[c.pos] == '*') {
      ++c.pos;
      c.skip_ws();
    }
    int exp = 0;
    if (c.pos + var.size() <= c.s.size() && c.s.compare(c.pos, var.size(), var) == 0) {
      c.pos += var.size();
      exp = 1;
      c.skip_ws();
      if (c.pos < c.s.size() && c.s[c.pos] == '^') {
        ++c.pos;
        Int e = parse_uint(c);
        if (!e.fits_sint_p()) c.fail("exponent too large");
        exp = static_cast<int>(e.get_si());
      }
    } else if (!have_coef) {
      c.fail("expected coefficient or variable");
    }
    acc += Poly::monomial(sign * coef, exp, var);
    first = false;
  }
  return acc;
}

VarSet::VarSet() {
  static const auto kEmpty = std::make_shared<const std::vector<std::string>>();
  names_ = kEmpty;
}

VarSet VarSet::make(std::vector<std::string> names) {
  VarSet v;
  v.names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  return v;
}

int VarSet::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return static_cast<int>(i);
  return -1;
}

MPoly::MPoly(VarSet vars) : vars_(std::move(vars)) {}

MPoly::MPoly(VarSet vars, const Rat& constant) : vars_(std::move(vars)) {
  if (constant != 0) terms_.emplace(Exps(vars_.size(), 0), constant);
}

MPoly MPoly::variable(const VarSet& vars, const std::string& name) {
  int i = vars.index_of(name);
  if (i < 0) throw std::invalid_argument("variable not in registry: " + name);
  Exps e(vars.size(), 0);
  e[i] = 1;
  return monomial(vars, e, 1);
}

MPoly MPoly::monomial(const VarSet& vars, const Exps& e, const Rat& c) {
  if (e.size() != vars.size()) throw std::invalid_argument("exponent vector length mismatch");
  MPoly p(vars);
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

MPoly MPoly::from_poly(const VarSet& vars, const Poly& p, const std::string& var) {
  int i = vars.index_of(var);
  if (i < 0) throw std::invalid_argument("variable not in registry: " + var);
  MPoly out(vars);
  for (size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] == 0) continue;
    Exps e(vars.size(), 0);
    e[i] = static_cast<uint32_t>(k);
    out.terms_.emplace(std::move(e), p.coeffs()[k]);
  }
  return out;
}

void MPoly::add_term(const Exps& e, const Rat& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (!vars_.same_as(o.vars_)) {
    if (terms_.empty() && vars_.size() == 0) vars_ = o.vars_;
    else throw std::invalid_argument("MPoly registry mismatch");
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (!vars_.same_as(o.vars_)) {
    if (terms_.empty() && vars_.size() == 0) vars_ = o.vars_;
    else throw std::invalid_argument("MPoly registry mismatch");
  }
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (!a.vars_.same_as(b.vars_)) throw std::invalid_argument("MPoly registry mismatch");
  MPoly out(a.vars_);
  MPoly::Exps e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly operator*(const Rat& c, MPoly p) {
  if (c == 0) return MPoly(p.vars_);
  for (auto& [e, coef] : p.terms_) coef *= c;
  return p;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(vars_, Rat(1));
  MPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

MPoly MPoly::coeff_of(const std::string& var, uint32_t k) const {
  int i = vars_.index_of(var);
  if (i < 0) throw std::invalid_argument("variable not in registry: " + var);
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Exps e2 = e;
    e2[i] = 0;
    out.add_term(e2, c);
  }
  return out;
}

uint32_t MPoly::max_degree(const std::string& var) const {
  int i = vars_.index_of(var);
  if (i < 0) throw std::invalid_argument("variable not in registry: " + var);
  uint32_t m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e[i]);
  return m;
}

MPoly MPoly::substituted(const std::string& var, const MPoly& value) const {
  int i = vars_.index_of(var);
  if (i < 0) throw std::invalid_argument("variable not in registry: " + var);
  // Horner over the var-degree strata keeps the number of multiplies low.
  uint32_t dmax = max_degree(var);
  MPoly acc(vars_);
  for (uint32_t d = dmax + 1; d-- > 0;) {
    acc = acc * value;
    acc += coeff_of(var, d);
  }
  return acc;
}

MPoly MPoly::substituted(const std::string& var, const Rat& value) const {
  int i = vars_.index_of(var);
  if (i < 0) throw std::invalid_argument("variable not in registry: " + var);
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Rat scaled = c;
    for (uint32_t k = 0; k < e[i]; ++k) scaled *= value;
    Exps e2 = e;
    e2[i] = 0;
    out.add_term(e2, scaled);
  }
  return out;
}

Poly MPoly::to_poly(const std::string& var) const {
  int i = vars_.index_of(var);
  if (i < 0) throw std::invalid_argument("variable not in registry: " + var);
  std::vector<Rat> cs;
  for (const auto& [e, c] : terms_) {
    for (size_t j = 0; j < e.size(); ++j)
      if (static_cast<int>(j) != i && e[j] != 0)
        throw std::domain_error("to_poly: foreign variable " + vars_.name(j) + " present");
    if (e[i] >= cs.size()) cs.resize(e[i] + 1, Rat(0));
    cs[e[i]] = c;
  }
  return Poly(std::move(cs), var);
}

Rat MPoly::constant_value() const {
  Rat out(0);
  for (const auto& [e, c] : terms_) {
    for (size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) throw std::domain_error("constant_value: variable " + vars_.name(j) + " present");
    out = c;
  }
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // std::map orders exponent vectors ascending; canonical order is
  // descending lexicographic, so iterate in reverse.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string varpart;
    for (size_t i = 0; i < it->first.size(); ++i) varpart += power_string(vars_.name(i), it->first[i]);
    render_term(os, first, it->second, varpart);
    first = false;
  }
  return os.str();
}

MPoly mpoly_scalar_product(const MPoly& z, const MPoly& b, const std::string& tvar) {
  if (!z.vars().same_as(b.vars())) throw std::invalid_argument("MPoly registry mismatch");
  uint32_t d = std::min(z.max_degree(tvar), b.max_degree(tvar));
  MPoly out(z.vars());
  for (uint32_t i = 0; i <= d; ++i) out += z.coeff_of(tvar, i) * b.coeff_of(tvar, i);
  return out;
}

std::optional<MPoly> mpoly_divexact_linear(const MPoly& p, const std::string& var, const Rat& root) {
  int vi = p.vars().index_of(var);
  if (vi < 0) throw std::invalid_argument("variable not in registry: " + var);
  // Synthetic division by (var - root), applied per group of terms sharing
  // the exponents of every other variable.
  std::map<MPoly::Exps, std::vector<Rat>> groups;
  for (const auto& [e, c] : p.terms()) {
    MPoly::Exps key = e;
    uint32_t d = key[vi];
    key[vi] = 0;
    auto& col = groups[key];
    if (col.size() <= d) col.resize(d + 1, Rat(0));
    col[d] = c;
  }
  MPoly out(p.vars());
  for (auto& [key, col] : groups) {
    // col holds a univariate polynomial in var; divide by (var - root).
    Rat carry(0);
    std::vector<Rat> quot(col.size() > 0 ? col.size() - 1 : 0, Rat(0));
    for (size_t i = col.size(); i-- > 0;) {
      Rat cur = col[i] + carry;
      if (i == 0) {
        if (cur != 0) return std::nullopt;  // remainder
        break;
      }
      quot[i - 1] = cur;
      carry = cur * root;
    }
    for (size_t i = 0; i < quot.size(); ++i) {
      if (quot[i] == 0) continue;
      MPoly::Exps e = key;
      e[vi] = static_cast<uint32_t>(i);
      out += MPoly::monomial(p.vars(), e, quot[i]);
    }
  }
  return out;
}

}  // namespace schro
