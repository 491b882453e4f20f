#ifndef SCHROCOUNT_GROUPRING_HPP
#define SCHROCOUNT_GROUPRING_HPP

// Exact arithmetic in the integral group ring of SL2(F_q), powers of the
// element U_M = sum over mu in M, x in F_q of [(x, mu; -1/mu, 0)], the
// column-class partition with its alpha/beta/gamma coefficient sequences,
// and the trace-2 / trace-(-2) coefficient sums. Coefficients are
// arbitrary-precision integers throughout.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "gf.hpp"

namespace schro {

// Fixed enumeration of SL2(F_q): all (a,b,c,d) with ad - bc = 1, in
// lexicographic order of the integer encodings. Deterministic across runs.
class Sl2Group {
 public:
  explicit Sl2Group(const GfField& F);

  const GfField& field() const { return F_; }
  size_t order() const { return elems_.size(); }  // q^3 - q
  const std::array<uint16_t, 4>& elem(size_t i) const { return elems_[i]; }
  // Index of (a,b,c,d); -1 when the determinant is not 1.
  int32_t index(uint32_t a, uint32_t b, uint32_t c, uint32_t d) const;
  int32_t identity_index() const { return id_; }
  size_t mul(size_t i, size_t j) const;  // group product by table arithmetic
  uint32_t trace(size_t i) const { return traces_[i]; }

 private:
  GfField F_;
  std::vector<std::array<uint16_t, 4>> elems_;
  std::vector<int32_t> index_;  // by packed (a,b,c,d) code
  std::vector<uint16_t> traces_;
  int32_t id_ = -1;
};

// Element of Z[SL2(F_q)]. Stored sparsely while the support is small and
// switched to a dense coefficient array over the fixed enumeration once the
// support exceeds half the group; both forms produce identical results.
class GroupRingElem {
 public:
  explicit GroupRingElem(std::shared_ptr<const Sl2Group> G);

  const std::shared_ptr<const Sl2Group>& group() const { return G_; }
  void add(size_t idx, const Int& c);
  Int coeff(size_t idx) const;  // 0 when absent
  size_t support_size() const;
  bool is_dense() const { return dense_; }
  Int coeff_sum() const;
  void for_each(const std::function<void(size_t, const Int&)>& fn) const;
  bool operator==(const GroupRingElem& o) const;

 private:
  void densify();
  std::shared_ptr<const Sl2Group> G_;
  bool dense_ = false;
  std::map<size_t, Int> sparse_;
  std::vector<Int> vec_;
};

// Convolution product; both factors must live over the same group object.
GroupRingElem gr_mul(const GroupRingElem& x, const GroupRingElem& y);

GroupRingElem gr_identity(std::shared_ptr<const Sl2Group> G);
// U_M: qm terms, all coefficients 1. M must be a subgroup of the units.
GroupRingElem build_um_element(std::shared_ptr<const Sl2Group> G, const UnitSubgroup& M);
// A(M) = sum over mu of [(1/mu, 0; 0, mu)]; satisfies A(M)^2 = m A(M).
GroupRingElem build_am_element(std::shared_ptr<const Sl2Group> G, const UnitSubgroup& M);
// U = sum over x of [(x, 1; -1, 0)]; U_M = A(M) U = U A(M).
GroupRingElem build_u_element(std::shared_ptr<const Sl2Group> G);

// The three coefficient sequences as polynomials in q (gamma carries the
// denominator m). Closed form and recurrence are exposed separately; they
// agree for all n >= 1.
struct AbcTriple {
  Poly alpha, beta, gamma;
};
AbcTriple abc_closed(int n, int m);
AbcTriple abc_recurrence(int n, int m);

// Parts of the partition of non-zero columns (b,d) of F_q^2. The first and
// fifth apply when -1 is in M, the +/- variants when it is not; MBar0 and
// FqMBar apply in both cases.
enum class ColumnClass { M0, PlusM0, MinusM0, MBar0, FqM, FqPlusM, FqMinusM, FqMBar };
std::string column_class_name(ColumnClass c);
ColumnClass classify_column(const GfField& F, uint32_t b, uint32_t d, const UnitSubgroup& M);
// Table value of the class at step n, as a polynomial in q.
Poly column_class_value(ColumnClass c, int n, int m);

// Full-coefficient comparison of the n-th powers of U_M against
// m^n * (b,d)_n over every group element, for n = 1..n_max.
struct Theorem6Report {
  bool ok = true;
  int n_max = 0;
  int mismatch_n = -1;
  std::string detail;
};
Theorem6Report theorem6_verify(const GfField& F, const UnitSubgroup& M, int n_max);

// Sum of the n-th power's coefficients over elements of trace tau_sign * 2,
// divided by m^n, next to the closed form. The value is an exact rational:
// its denominator divides m (the (m(q-1)+q*kappa)/m term of the closed form).
// The two must agree; the function throws std::logic_error if they do not.
struct TraceSumResult {
  Rat via_power;
  Rat closed_form;
};
TraceSumResult trace_sum(const GfField& F, const UnitSubgroup& M, int n, int tau_sign);
// Closed form alone, symbolic in q. tau_sign in {+1, -1} selects trace +-2.
Poly trace_sum_closed_poly(int n, int m, int tau_sign, bool minus_one_in_M);

// Exhaustive census: how many group elements carry each trace.
std::map<uint32_t, Int> sl2_trace_census(const GfField& F);

}  // namespace schro

#endif
