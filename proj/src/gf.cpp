#include "gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schro {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Digits = std::vector<int>;  // polynomial over F_p, index = power

Digits trim(Digits v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

Digits poly_mod(Digits a, const Digits& m, int p) {
  a = trim(std::move(a));
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int da = static_cast<int>(a.size()) - 1;
    int lead = a.back() % p;
    // m is monic, so subtract lead * x^(da-dm) * m.
    for (int i = 0; i <= dm; ++i) {
      int& c = a[da - dm + i];
      c = ((c - lead * m[i]) % p + p) % p;
    }
    a = trim(std::move(a));
  }
  return a;
}

Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& m, int p) {
  if (a.empty() || b.empty()) return {};
  Digits out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(out), m, p);
}

// Remainder of a modulo d over F_p, d monic not required.
Digits poly_rem(Digits a, const Digits& d, int p) {
  a = trim(std::move(a));
  Digits dv = trim(d);
  int dd = static_cast<int>(dv.size()) - 1;
  // Make the divisor monic by scaling with the inverse of its lead.
  int lead = dv.back();
  int inv_lead = 1;
  for (int x = 1; x < p; ++x)
    if (lead * x % p == 1) inv_lead = x;
  while (static_cast<int>(a.size()) - 1 >= dd && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    int f = a.back() * inv_lead % p;
    for (int i = 0; i <= dd; ++i) {
      int& c = a[da - dd + i];
      c = ((c - f * dv[i]) % p + p) % p;
    }
    a = trim(std::move(a));
  }
  return a;
}

// Irreducibility over F_p by trial division against every monic polynomial
// of degree 1..deg/2. All constructed moduli have deg <= 6 and p <= 7 when
// deg >= 2, so the search space is tiny.
bool irreducible(const Digits& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<uint64_t>(p);
    for (uint64_t code = 0; code < count; ++code) {
      Digits div(d + 1, 0);
      uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<int>(c % p);
        c /= p;
      }
      div[d] = 1;
      if (poly_rem(f, div, p).empty()) return false;
    }
  }
  return true;
}

uint32_t encode(const Digits& a, int p, int k) {
  uint32_t v = 0;
  for (int i = k - 1; i >= 0; --i) v = v * p + (i < static_cast<int>(a.size()) ? a[i] : 0);
  return v;
}

Digits decode(uint32_t v, int p, int k) {
  Digits a(k, 0);
  for (int i = 0; i < k; ++i) {
    a[i] = static_cast<int>(v % p);
    v /= p;
  }
  return trim(std::move(a));
}

}  // namespace

GfField::GfField(int p, int k, uint32_t bound) : p_(p), k_(k) {
  if (!is_prime(static_cast<uint64_t>(p))) throw std::invalid_argument("characteristic must be prime");
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  bound = std::min<uint32_t>(bound, 64);
  uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= static_cast<uint64_t>(p);
    if (q > bound) throw std::invalid_argument("field size exceeds bound");
  }
  q_ = static_cast<uint32_t>(q);

  // Lexicographically least monic irreducible: scan the constant-first
  // coefficient tuples in increasing order.
  modulus_.assign(k + 1, 0);
  modulus_[k] = 1;
  bool found = false;
  uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<uint64_t>(p);
  for (uint64_t code = 0; code < count && !found; ++code) {
    uint64_t c = code;
    // code's base-p digits give (c_{k-1}, ..., c_0) so that increasing code
    // order matches lexicographic low-degree-first comparison.
    Digits cand(k + 1, 0);
    cand[k] = 1;
    // c_0 takes the most significant digit so that increasing code order is
    // exactly the low-degree-first lexicographic order on (c_0, ..., c_{k-1}).
    for (int i = k - 1; i >= 0; --i) {
      cand[i] = static_cast<int>(c % p);
      c /= p;
    }
    if (irreducible(cand, p)) {
      modulus_ = cand;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no irreducible modulus found");

  add_.assign(static_cast<size_t>(q_) * q_, 0);
  mul_.assign(static_cast<size_t>(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  for (uint32_t a = 0; a < q_; ++a) {
    Digits da = decode(a, p, k);
    // Negation digit-wise.
    Digits na = da;
    for (int& d : na) d = (p - d) % p;
    neg_[a] = encode(na, p, k);
    for (uint32_t b = 0; b < q_; ++b) {
      Digits db = decode(b, p, k);
      Digits s(std::max(da.size(), db.size()), 0);
      for (size_t i = 0; i < s.size(); ++i) {
        int x = (i < da.size() ? da[i] : 0) + (i < db.size() ? db[i] : 0);
        s[i] = x % p;
      }
      add_[a * q_ + b] = encode(s, p, k);
      mul_[a * q_ + b] = encode(poly_mulmod(da, db, modulus_, p), p, k);
    }
  }
  for (uint32_t a = 1; a < q_; ++a)
    for (uint32_t b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = b;

  jclass_.assign(q_, 0);
  if (p != 2) {
    for (uint32_t a = 1; a < q_; ++a) jclass_[a] = -1;
    for (uint32_t a = 1; a < q_; ++a) jclass_[mul_[a * q_ + a]] = 1;
  }
}

uint32_t GfField::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

uint32_t GfField::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

uint32_t GfField::from_int(long long m) const {
  long long r = m % p_;
  if (r < 0) r += p_;
  return static_cast<uint32_t>(r);
}

int GfField::jacobi_class(uint32_t a) const { return jclass_[a]; }

std::string GfField::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = k_; i >= 0; --i) {
    int c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << "+";
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

JacobiClass gf_jacobi_class(const GfField& f, uint32_t a) {
  if (!f.odd_char()) throw std::domain_error("square classes need odd characteristic");
  int c = f.jacobi_class(a);
  if (c == 0) return JacobiClass::Zero;
  return c > 0 ? JacobiClass::Square : JacobiClass::NonSquare;
}

std::vector<UnitSubgroup> gf_units_subgroups(const GfField& f) {
  uint32_t n = f.q() - 1;
  uint32_t minus_one = f.neg(1);
  std::vector<uint32_t> divisors;
  for (uint32_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  std::vector<UnitSubgroup> out;
  for (uint32_t d : divisors) {
    UnitSubgroup g;
    g.order = d;
    for (uint32_t a = 1; a < f.q(); ++a)
      if (f.pow(a, d) == 1) g.elems.push_back(a);
    std::sort(g.elems.begin(), g.elems.end());
    if (g.elems.size() != d) throw std::logic_error("unit group not cyclic?");
    g.has_minus_one = std::find(g.elems.begin(), g.elems.end(), minus_one) != g.elems.end();
    out.push_back(std::move(g));
  }
  return out;
}

GfField gf_parse_spec(const std::string& spec, uint32_t bound) {
  auto fail = [&]() {
    throw std::invalid_argument("bad field spec '" + spec + "': expected GF(q) or GF(p^k)");
  };
  std::string s = spec;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.size() < 5 || (s.compare(0, 3, "GF(") != 0 && s.compare(0, 3, "gf(") != 0) || s.back() != ')') fail();
  std::string body = s.substr(3, s.size() - 4);
  auto caret = body.find('^');
  auto parse_num = [&](const std::string& t) -> long long {
    if (t.empty()) fail();
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    if (t.size() > 9) fail();
    return std::stoll(t);
  };
  if (caret != std::string::npos) {
    long long p = parse_num(body.substr(0, caret));
    long long k = parse_num(body.substr(caret + 1));
    return GfField(static_cast<int>(p), static_cast<int>(k), bound);
  }
  long long q = parse_num(body);
  if (q < 2) fail();
  // Factor q as a prime power.
  long long p = 0;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return GfField(static_cast<int>(q), 1, bound);
  long long rest = q;
  int k = 0;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw std::invalid_argument("field size " + std::to_string(q) + " is not a prime power");
  return GfField(static_cast<int>(p), k, bound);
}

}  // namespace schro
