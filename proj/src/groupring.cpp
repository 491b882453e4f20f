#include "groupring.hpp"

#include <algorithm>

namespace schro {

namespace {

uint32_t packed(uint32_t q, uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
  return ((a * q + b) * q + c) * q + d;
}

Int int_pow(Int base, unsigned e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace

Sl2Group::Sl2Group(const GfField& F) : F_(F) {
  const uint32_t q = F_.q();
  if (q > 32) throw std::invalid_argument("group ring arithmetic is limited to q <= 32");
  index_.assign(static_cast<size_t>(q) * q * q * q, -1);
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b)
      for (uint32_t c = 0; c < q; ++c)
        for (uint32_t d = 0; d < q; ++d) {
          if (F_.sub(F_.mul(a, d), F_.mul(b, c)) != 1) continue;
          index_[packed(q, a, b, c, d)] = static_cast<int32_t>(elems_.size());
          elems_.push_back({static_cast<uint16_t>(a), static_cast<uint16_t>(b),
                            static_cast<uint16_t>(c), static_cast<uint16_t>(d)});
          traces_.push_back(static_cast<uint16_t>(F_.add(a, d)));
        }
  id_ = index(1, 0, 0, 1);
}

int32_t Sl2Group::index(uint32_t a, uint32_t b, uint32_t c, uint32_t d) const {
  return index_[packed(F_.q(), a, b, c, d)];
}

size_t Sl2Group::mul(size_t i, size_t j) const {
  const auto& x = elems_[i];
  const auto& y = elems_[j];
  uint32_t a = F_.add(F_.mul(x[0], y[0]), F_.mul(x[1], y[2]));
  uint32_t b = F_.add(F_.mul(x[0], y[1]), F_.mul(x[1], y[3]));
  uint32_t c = F_.add(F_.mul(x[2], y[0]), F_.mul(x[3], y[2]));
  uint32_t d = F_.add(F_.mul(x[2], y[1]), F_.mul(x[3], y[3]));
  return static_cast<size_t>(index(a, b, c, d));
}

GroupRingElem::GroupRingElem(std::shared_ptr<const Sl2Group> G) : G_(std::move(G)) {}

void GroupRingElem::densify() {
  vec_.assign(G_->order(), Int(0));
  for (const auto& [idx, c] : sparse_) vec_[idx] = c;
  sparse_.clear();
  dense_ = true;
}

void GroupRingElem::add(size_t idx, const Int& c) {
  if (dense_) {
    vec_[idx] += c;
    return;
  }
  Int& slot = sparse_[idx];
  slot += c;
  if (slot == 0) sparse_.erase(idx);
  if (sparse_.size() > G_->order() / 2) densify();
}

Int GroupRingElem::coeff(size_t idx) const {
  if (dense_) return vec_[idx];
  auto it = sparse_.find(idx);
  return it == sparse_.end() ? Int(0) : it->second;
}

size_t GroupRingElem::support_size() const {
  if (!dense_) return sparse_.size();
  size_t n = 0;
  for (const Int& c : vec_)
    if (c != 0) ++n;
  return n;
}

Int GroupRingElem::coeff_sum() const {
  Int s = 0;
  for_each([&](size_t, const Int& c) { s += c; });
  return s;
}

void GroupRingElem::for_each(const std::function<void(size_t, const Int&)>& fn) const {
  if (dense_) {
    for (size_t i = 0; i < vec_.size(); ++i)
      if (vec_[i] != 0) fn(i, vec_[i]);
  } else {
    for (const auto& [idx, c] : sparse_) fn(idx, c);
  }
}

bool GroupRingElem::operator==(const GroupRingElem& o) const {
  for (size_t i = 0; i < G_->order(); ++i)
    if (coeff(i) != o.coeff(i)) return false;
  return true;
}

namespace {

void require_same_group(const GroupRingElem& x, const GroupRingElem& y) {
  const GfField& a = x.group()->field();
  const GfField& b = y.group()->field();
  if (a.p() != b.p() || a.q() != b.q() || a.modulus_string() != b.modulus_string())
    throw std::invalid_argument("group ring elements live over different fields");
}

}  // namespace

GroupRingElem gr_mul(const GroupRingElem& x, const GroupRingElem& y) {
  require_same_group(x, y);
  const Sl2Group& G = *x.group();
  GroupRingElem out(x.group());
  x.for_each([&](size_t i, const Int& xi) {
    y.for_each([&](size_t j, const Int& yj) { out.add(G.mul(i, j), xi * yj); });
  });
  return out;
}

GroupRingElem gr_identity(std::shared_ptr<const Sl2Group> G) {
  GroupRingElem e(G);
  e.add(static_cast<size_t>(G->identity_index()), 1);
  return e;
}

GroupRingElem build_um_element(std::shared_ptr<const Sl2Group> G, const UnitSubgroup& M) {
  const GfField& F = G->field();
  GroupRingElem um(G);
  for (uint32_t mu : M.elems) {
    uint32_t c = F.neg(F.inv(mu));
    for (uint32_t x = 0; x < F.q(); ++x) um.add(static_cast<size_t>(G->index(x, mu, c, 0)), 1);
  }
  return um;
}

GroupRingElem build_am_element(std::shared_ptr<const Sl2Group> G, const UnitSubgroup& M) {
  const GfField& F = G->field();
  GroupRingElem am(G);
  for (uint32_t mu : M.elems) am.add(static_cast<size_t>(G->index(F.inv(mu), 0, 0, mu)), 1);
  return am;
}

GroupRingElem build_u_element(std::shared_ptr<const Sl2Group> G) {
  const GfField& F = G->field();
  GroupRingElem u(G);
  for (uint32_t x = 0; x < F.q(); ++x)
    u.add(static_cast<size_t>(G->index(x, 1, F.neg(1), 0)), 1);
  return u;
}

namespace {

// Sum of q^(2i) for i < k, i.e. (q^(2k) - 1) / (q^2 - 1).
Poly geo_even(int k) {
  Poly s(Rat(0), "q");
  for (int i = 0; i < k; ++i) s += Poly::monomial(1, 2 * i, "q");
  return s;
}

// Sum of q^i for i < k, i.e. (q^k - 1) / (q - 1).
Poly geo_all(int k) {
  Poly s(Rat(0), "q");
  for (int i = 0; i < k; ++i) s += Poly::monomial(1, i, "q");
  return s;
}

}  // namespace

AbcTriple abc_closed(int n, int m) {
  if (n < 1) throw std::invalid_argument("abc sequences start at n = 1");
  if (m < 1) throw std::invalid_argument("m must be a positive subgroup order");
  const int e = (n % 2 == 0) ? 1 : 0;  // (n-1) mod 2
  const int k = (n - 1) / 2;
  Poly qe = Poly::monomial(1, e, "q");
  AbcTriple t;
  t.beta = qe * geo_even(k);
  t.alpha = t.beta - geo_all(k);
  t.gamma = t.alpha + Poly::monomial(Rat(1) / Rat(m), k, "q");
  return t;
}

AbcTriple abc_recurrence(int n, int m) {
  if (n < 1) throw std::invalid_argument("abc sequences start at n = 1");
  if (m < 1) throw std::invalid_argument("m must be a positive subgroup order");
  Poly q = Poly::variable("q");
  Poly one(Rat(1), "q");
  AbcTriple t{Poly(Rat(0), "q"), Poly(Rat(0), "q"), Poly(Rat(1) / Rat(m), "q")};
  for (int i = 2; i <= n; ++i) {
    AbcTriple nxt;
    if (i % 2 == 0) {
      nxt.alpha = t.alpha + (q - one) * t.beta;
      nxt.gamma = (q - one) * t.beta + t.gamma;
      nxt.beta = q * t.beta;
    } else {
      nxt.alpha = q * t.alpha;
      nxt.gamma = q * t.gamma;
      nxt.beta = q * t.beta + one;
    }
    t = nxt;
  }
  return t;
}

std::string column_class_name(ColumnClass c) {
  switch (c) {
    case ColumnClass::M0: return "(M,0)";
    case ColumnClass::PlusM0: return "(+M,0)";
    case ColumnClass::MinusM0: return "(-M,0)";
    case ColumnClass::MBar0: return "(Mbar,0)";
    case ColumnClass::FqM: return "(Fq,M)";
    case ColumnClass::FqPlusM: return "(Fq,+M)";
    case ColumnClass::FqMinusM: return "(Fq,-M)";
    case ColumnClass::FqMBar: return "(Fq,Mbar)";
  }
  return "?";
}

ColumnClass classify_column(const GfField& F, uint32_t b, uint32_t d, const UnitSubgroup& M) {
  if (b == 0 && d == 0) throw std::invalid_argument("the zero column is not classified");
  auto in_m = [&](uint32_t v) {
    return std::binary_search(M.elems.begin(), M.elems.end(), v);
  };
  if (d == 0) {
    if (M.has_minus_one) return in_m(b) ? ColumnClass::M0 : ColumnClass::MBar0;
    if (in_m(b)) return ColumnClass::PlusM0;
    return in_m(F.neg(b)) ? ColumnClass::MinusM0 : ColumnClass::MBar0;
  }
  if (M.has_minus_one) return in_m(d) ? ColumnClass::FqM : ColumnClass::FqMBar;
  if (in_m(d)) return ColumnClass::FqPlusM;
  return in_m(F.neg(d)) ? ColumnClass::FqMinusM : ColumnClass::FqMBar;
}

Poly column_class_value(ColumnClass c, int n, int m) {
  AbcTriple t = abc_closed(n, m);
  // Rows of the value table, indexed by n mod 4.
  auto pick = [&](char v0, char v1, char v2, char v3) {
    char sel[4] = {v0, v1, v2, v3};
    switch (sel[n % 4]) {
      case 'a': return t.alpha;
      case 'b': return t.beta;
      default: return t.gamma;
    }
  };
  switch (c) {
    case ColumnClass::M0: return pick('b', 'g', 'b', 'g');
    case ColumnClass::PlusM0: return pick('b', 'g', 'b', 'a');
    case ColumnClass::MinusM0: return pick('b', 'a', 'b', 'g');
    case ColumnClass::MBar0: return pick('b', 'a', 'b', 'a');
    case ColumnClass::FqM: return pick('g', 'b', 'g', 'b');
    case ColumnClass::FqPlusM: return pick('g', 'b', 'a', 'b');
    case ColumnClass::FqMinusM: return pick('a', 'b', 'g', 'b');
    case ColumnClass::FqMBar: return pick('a', 'b', 'a', 'b');
  }
  throw std::logic_error("unreachable column class");
}

Theorem6Report theorem6_verify(const GfField& F, const UnitSubgroup& M, int n_max) {
  auto G = std::make_shared<const Sl2Group>(F);
  GroupRingElem um = build_um_element(G, M);
  GroupRingElem power = um;
  Theorem6Report report;
  report.n_max = n_max;
  const Rat qr(static_cast<long>(F.q()));

  for (int n = 1; n <= n_max; ++n) {
    // Evaluate the three sequences once per step; the table then selects.
    AbcTriple t = abc_closed(n, static_cast<int>(M.order));
    Rat mn = 1;
    for (int i = 0; i < n; ++i) mn *= Rat(static_cast<long>(M.order));
    for (size_t i = 0; i < G->order(); ++i) {
      const auto& g = G->elem(i);
      ColumnClass cls = classify_column(F, g[1], g[3], M);
      Poly val = column_class_value(cls, n, static_cast<int>(M.order));
      Rat expect = mn * val.eval(qr);
      if (expect.get_den() != 1) {
        report.ok = false;
        report.mismatch_n = n;
        report.detail = "non-integral table value for " + column_class_name(cls);
        return report;
      }
      if (power.coeff(i) != Int(expect.get_num())) {
        report.ok = false;
        report.mismatch_n = n;
        report.detail = "coefficient mismatch at n=" + std::to_string(n) + " class " +
                        column_class_name(cls);
        return report;
      }
    }
    if (n < n_max) power = gr_mul(power, um);
  }
  return report;
}

Poly trace_sum_closed_poly(int n, int m, int tau_sign, bool minus_one_in_M) {
  if (tau_sign != 1 && tau_sign != -1) throw std::invalid_argument("trace must be +2 or -2");
  if (n < 1) throw std::invalid_argument("trace sums start at n = 1");
  Poly q = Poly::variable("q");
  if (n % 2 == 1) return geo_even((n + 1) / 2);
  int kappa;
  if (minus_one_in_M)
    kappa = 1;
  else if (tau_sign == 1)
    kappa = (n % 4 == 0) ? 1 : 0;
  else
    kappa = (n % 4 == 2) ? 1 : 0;
  const int h = (n - 2) / 2;
  Poly out = Poly::monomial(1, 3, "q") * geo_even(h);
  out -= (q * q - q + Poly(Rat(1), "q")) * geo_all(h);
  out += (q - Poly(Rat(1), "q")) * Poly::monomial(1, h, "q");
  out += Poly::monomial(Rat(kappa) / Rat(m), h + 1, "q");
  return out;
}

TraceSumResult trace_sum(const GfField& F, const UnitSubgroup& M, int n, int tau_sign) {
  if (tau_sign != 1 && tau_sign != -1) throw std::invalid_argument("trace must be +2 or -2");
  if (n < 1) throw std::invalid_argument("trace sums start at n = 1");
  auto G = std::make_shared<const Sl2Group>(F);
  GroupRingElem um = build_um_element(G, M);
  GroupRingElem power = um;
  for (int i = 2; i <= n; ++i) power = gr_mul(power, um);

  const uint32_t tau = F.from_int(2 * tau_sign);
  Int raw = 0;
  power.for_each([&](size_t i, const Int& c) {
    if (G->trace(i) == tau) raw += c;
  });
  Int mn = int_pow(Int(static_cast<long>(M.order)), static_cast<unsigned>(n));

  TraceSumResult out;
  out.via_power = Rat(raw) / Rat(mn);
  out.closed_form = trace_sum_closed_poly(n, static_cast<int>(M.order), tau_sign, M.has_minus_one)
                        .eval(Rat(static_cast<long>(F.q())));
  if (out.via_power != out.closed_form)
    throw std::logic_error("trace sum mismatch between convolution and closed form");
  return out;
}

std::map<uint32_t, Int> sl2_trace_census(const GfField& F) {
  Sl2Group G(F);
  std::map<uint32_t, Int> census;
  for (size_t i = 0; i < G.order(); ++i) census[G.trace(i)] += 1;
  return census;
}

}  // namespace schro
