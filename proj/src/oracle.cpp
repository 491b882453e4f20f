#include "oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "groupring.hpp"

namespace schro {

namespace {

/* One elimination workspace per sweep: the base matrix (adjacency part)
   is copied in, the diagonal is overwritten, and rows are reduced with
   the field's add/mul tables. Only invertibility (or the determinant
   value, for the census) is needed, so no back-substitution. */
struct Eliminator {
  explicit Eliminator(const GfField& F, int n)
      : F_(F), n_(n), q_(F.q()), add_(F.add_table()), mul_(F.mul_table()),
        neg_(q_), inv_(q_), work_(static_cast<size_t>(n) * n) {
    for (uint32_t v = 0; v < q_; ++v) neg_[v] = static_cast<uint16_t>(F.neg(v));
    for (uint32_t v = 1; v < q_; ++v) inv_[v] = static_cast<uint16_t>(F.inv(v));
  }

  uint16_t* load(const std::vector<uint16_t>& base) {
    work_ = base;
    return work_.data();
  }

  // Reduces work_ in place; returns the determinant (0 when singular).
  uint32_t determinant() {
    uint16_t* m = work_.data();
    uint32_t det = 1;
    for (int col = 0; col < n_; ++col) {
      int piv = -1;
      for (int r = col; r < n_; ++r)
        if (m[r * n_ + col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      if (piv != col) {
        for (int c = col; c < n_; ++c)
          std::swap(m[piv * n_ + c], m[col * n_ + c]);
        det = neg_[det];
      }
      const uint16_t pv = m[col * n_ + col];
      det = mul_[det * q_ + pv];
      const uint16_t pinv = inv_[pv];
      for (int r = col + 1; r < n_; ++r) {
        const uint16_t v = m[r * n_ + col];
        if (v == 0) continue;
        const uint16_t f = neg_[mul_[v * q_ + pinv]];
        m[r * n_ + col] = 0;
        for (int c = col + 1; c < n_; ++c)
          m[r * n_ + c] = add_[m[r * n_ + c] * q_ +
                               mul_[f * q_ + m[col * n_ + c]]];
      }
    }
    return det;
  }

  bool invertible() { return determinant() != 0; }

  const GfField& F_;
  int n_;
  uint32_t q_;
  const uint16_t* add_;
  const uint16_t* mul_;
  std::vector<uint16_t> neg_, inv_;
  std::vector<uint16_t> work_;
};

std::vector<uint16_t> adjacency_base(const Graph& g) {
  std::vector<uint16_t> base(static_cast<size_t>(g.n) * g.n, 0);
  for (auto [i, j] : g.edges) {
    base[static_cast<size_t>(i) * g.n + j] = 1;
    base[static_cast<size_t>(j) * g.n + i] = 1;
  }
  return base;
}

void check_guard(double states, double guard, const char* what) {
  if (states > guard)
    throw std::invalid_argument(std::string(what) +
                                " enumeration exceeds the configured guard");
}

// Advances a mixed-radix counter where slot i runs over [lo, lo+radix).
// Returns false once the counter wraps around to all-lo.
bool advance(std::vector<uint32_t>& slots, uint32_t lo, uint32_t radix) {
  for (auto& s : slots) {
    if (++s < lo + radix) return true;
    s = lo;
  }
  return false;
}

// Sum of q^(2i) for i < k.
Poly geo_even(int k) {
  Poly s(Rat(0), "q");
  for (int i = 0; i < k; ++i) s += Poly::monomial(1, 2 * i, "q");
  return s;
}

// (q-1)^k as a polynomial.
Poly qm1_pow(int k) {
  Poly base = Poly::variable("q") - Poly(Rat(1), "q");
  return base.pow(static_cast<unsigned>(k));
}

// Exact division by q; the dividend's constant term must vanish.
Poly div_by_q(const Poly& p) {
  if (!(p.coeff(0) == Rat(0)))
    throw std::logic_error("polynomial is not divisible by q");
  auto [quot, rem] = poly_divmod(p, Poly::variable("q"));
  if (!(rem == Poly(Rat(0), "q")))
    throw std::logic_error("polynomial is not divisible by q");
  return quot;
}

Int eval_at_field(const Poly& p, const GfField& F) {
  Rat v = p.eval(Rat(static_cast<long>(F.q())));
  if (v.get_den() != 1) throw std::logic_error("count evaluated to a non-integer");
  return Int(v.get_num());
}

}  // namespace

Int count_invertible_schrodinger(const Graph& g, const GfField& F, double guard) {
  const int n = g.n;
  if (n == 0) return 1;
  check_guard(std::pow(static_cast<double>(F.q()), n), guard, "diagonal");
  const std::vector<uint16_t> base = adjacency_base(g);
  Eliminator elim(F, n);
  std::vector<uint32_t> diag(static_cast<size_t>(n), 0);
  Int count = 0;
  do {
    uint16_t* m = elim.load(base);
    for (int i = 0; i < n; ++i) m[i * n + i] = static_cast<uint16_t>(diag[i]);
    if (elim.invertible()) ++count;
  } while (advance(diag, 0, F.q()));
  return count;
}

Int count_invertible_gmatrices(const Graph& g, const GfField& F, bool symmetric,
                               double guard) {
  const int n = g.n;
  if (n == 0) return 1;
  const size_t ne = g.edges.size();
  const int edge_slots = symmetric ? static_cast<int>(ne) : 2 * static_cast<int>(ne);
  check_guard(std::pow(static_cast<double>(F.q()), n + edge_slots), guard,
              "matrix family");

  Eliminator elim(F, n);
  std::vector<uint16_t> base(static_cast<size_t>(n) * n, 0);
  std::vector<uint32_t> diag(static_cast<size_t>(n), 0);
  std::vector<uint32_t> off(static_cast<size_t>(edge_slots), 1);
  Int count = 0;
  do {
    for (size_t e = 0; e < ne; ++e) {
      auto [i, j] = g.edges[e];
      if (symmetric) {
        base[static_cast<size_t>(i) * n + j] = static_cast<uint16_t>(off[e]);
        base[static_cast<size_t>(j) * n + i] = static_cast<uint16_t>(off[e]);
      } else {
        base[static_cast<size_t>(i) * n + j] = static_cast<uint16_t>(off[2 * e]);
        base[static_cast<size_t>(j) * n + i] = static_cast<uint16_t>(off[2 * e + 1]);
      }
    }
    std::fill(diag.begin(), diag.end(), 0);
    do {
      uint16_t* m = elim.load(base);
      for (int i = 0; i < n; ++i) m[i * n + i] = static_cast<uint16_t>(diag[i]);
      if (elim.invertible()) ++count;
    } while (advance(diag, 0, F.q()));
  } while (edge_slots > 0 && advance(off, 1, F.q() - 1));
  return count;
}

std::map<std::string, std::array<Int, 3>> classified_schrodinger_census(
    const Graph& g, const GfField& F, double guard) {
  if (!F.odd_char())
    throw std::invalid_argument("the square/non-square census needs odd characteristic");
  const int n = g.n;
  check_guard(std::pow(static_cast<double>(F.q()), n), guard, "diagonal");

  // Class of each field element: 0 zero, 1 square, 2 non-square.
  std::vector<char> cls(F.q(), 0);
  for (uint32_t v = 1; v < F.q(); ++v)
    cls[v] = F.jacobi_class(v) > 0 ? 1 : 2;
  const char letter[3] = {'z', 's', 'n'};

  const std::vector<uint16_t> base = adjacency_base(g);
  Eliminator elim(F, n);
  std::vector<uint32_t> diag(static_cast<size_t>(n), 0);
  std::map<std::string, std::array<Int, 3>> census;
  std::string pattern(static_cast<size_t>(n), 'z');
  do {
    uint16_t* m = elim.load(base);
    for (int i = 0; i < n; ++i) {
      m[i * n + i] = static_cast<uint16_t>(diag[i]);
      pattern[static_cast<size_t>(i)] = letter[static_cast<int>(cls[diag[i]])];
    }
    uint32_t det = elim.determinant();
    auto it = census.find(pattern);
    if (it == census.end())
      it = census.emplace(pattern, std::array<Int, 3>{Int(0), Int(0), Int(0)}).first;
    it->second[static_cast<size_t>(cls[det])] += 1;
  } while (advance(diag, 0, F.q()));
  return census;
}

Poly cycle_count_poly(int n, CycleParity parity) {
  if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
  const Poly one(Rat(1), "q");
  if (n % 2 == 1) {
    // q^n minus the sum of q^(2j) for 2j < n.
    return Poly::monomial(1, n, "q") - geo_even((n + 1) / 2);
  }
  const int k = n / 2;
  // (1 - q^k)(1 - q^(k+1)) / (1 - q^2), split on which factor is even.
  Poly t = (k % 2 == 0)
               ? geo_even(k / 2) * (one - Poly::monomial(1, k + 1, "q"))
               : geo_even((k + 1) / 2) * (one - Poly::monomial(1, k, "q"));
  if (parity == CycleParity::OddChar && n % 4 == 2)
    return Poly::monomial(1, n, "q") + t;
  return Poly::monomial(1, n, "q") - Poly::monomial(1, k, "q") + t;
}

Int cycle_count_closed(int n, const GfField& F) {
  CycleParity parity = F.p() == 2 ? CycleParity::EvenChar : CycleParity::OddChar;
  return eval_at_field(cycle_count_poly(n, parity), F);
}

Int cycle_count_via_groupring(int n, const GfField& F) {
  if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
  UnitSubgroup trivial;
  for (const auto& M : gf_units_subgroups(F))
    if (M.order == 1) trivial = M;
  const int tau_sign = (n % 2 == 0) ? 1 : -1;
  TraceSumResult r = trace_sum(F, trivial, n, tau_sign);
  if (r.via_power.get_den() != 1)
    throw std::logic_error("trace sum over the trivial subgroup must be integral");
  Int qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), F.q(), static_cast<unsigned long>(n));
  return qn - Int(r.via_power.get_num());
}

Poly complete_poly(int n) {
  if (n < 1) throw std::invalid_argument("complete graphs need at least 1 vertex");
  Poly top = qm1_pow(n + 1) + Poly(Rat(n % 2 == 0 ? 1 : -1), "q");
  return div_by_q(top) + Poly(Rat(n), "q") * qm1_pow(n - 1);
}

Int complete_count_closed(int n, const GfField& F) {
  return eval_at_field(complete_poly(n), F);
}

Poly complete_poly_via_chain(int n) {
  if (n < 2) throw std::invalid_argument("the chain form starts at 2 vertices");
  Poly s_n = Poly(Rat(n - 1), "q") * qm1_pow(n - 2) +
             div_by_q(qm1_pow(n) - Poly(Rat(n % 2 == 0 ? 1 : -1), "q"));
  return star_poly(n) + qm1_pow(n - 1) - s_n;
}

Poly star_poly(int n) {
  if (n < 2) throw std::invalid_argument("stars need at least 2 vertices");
  Poly q = Poly::variable("q");
  return (q * q + Poly(Rat(n - 3), "q") * q + Poly(Rat(1), "q")) * qm1_pow(n - 2);
}

Poly beta_closed_poly(int n) {
  if (n < 0) throw std::invalid_argument("beta is indexed by n >= 0");
  Poly signed_term = Poly(Rat(n % 2 == 0 ? -1 : 1), "q") *
                     (Poly::variable("q") - Poly(Rat(1), "q"));
  return div_by_q(qm1_pow(n + 1) + signed_term);
}

Poly beta_recurrence_poly(int n) {
  if (n < 0) throw std::invalid_argument("beta is indexed by n >= 0");
  Poly q = Poly::variable("q");
  Poly one(Rat(1), "q");
  Poly alpha = one;             // alpha_0
  Poly beta(Rat(0), "q");      // beta_0
  for (int i = 1; i <= n; ++i) {
    Poly nb = (q - one) * alpha + (q - Poly(Rat(2), "q")) * beta;
    alpha = beta;
    beta = nb;
  }
  return beta;
}

}  // namespace schro
