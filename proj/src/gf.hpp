#ifndef SCHROCOUNT_GF_HPP
#define SCHROCOUNT_GF_HPP

// Table-driven arithmetic in GF(p^k) for small prime powers. Elements are
// integers in [0,q) whose base-p digits are the coefficients of the residue
// polynomial (digit i = coefficient of x^i).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace schro {

class GfField {
 public:
  // Constructs GF(p^k) with the lexicographically least monic irreducible
  // modulus (coefficient sequences compared low-degree-first). q = p^k must
  // not exceed `bound`, and bound itself is capped at 64 so the full
  // operation tables always fit.
  GfField(int p, int k, uint32_t bound = 64);

  int p() const { return p_; }
  int k() const { return k_; }
  uint32_t q() const { return q_; }
  // k+1 entries, index i = coefficient of x^i; leading entry is 1.
  const std::vector<int>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  uint32_t add(uint32_t a, uint32_t b) const { return add_[a * q_ + b]; }
  uint32_t sub(uint32_t a, uint32_t b) const { return add_[a * q_ + neg_[b]]; }
  uint32_t mul(uint32_t a, uint32_t b) const { return mul_[a * q_ + b]; }
  uint32_t neg(uint32_t a) const { return neg_[a]; }
  uint32_t inv(uint32_t a) const;  // throws on zero
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t one() const { return 1; }
  // The field element m * 1 for an integer m (handles negatives).
  uint32_t from_int(long long m) const;

  // Raw table access for hot loops.
  const uint16_t* add_table() const { return add_.data(); }
  const uint16_t* mul_table() const { return mul_.data(); }

  bool odd_char() const { return p_ != 2; }
  // 0 at zero, +1 on the non-zero squares, -1 on the non-squares.
  // Only meaningful in odd characteristic.
  int jacobi_class(uint32_t a) const;

 private:
  int p_, k_;
  uint32_t q_;
  std::vector<int> modulus_;
  std::vector<uint16_t> add_, mul_;
  std::vector<uint16_t> neg_, inv_;
  std::vector<int8_t> jclass_;
};

enum class JacobiClass { Zero = 0, Square = 1, NonSquare = 2 };

JacobiClass gf_jacobi_class(const GfField& f, uint32_t a);  // throws in char 2

struct UnitSubgroup {
  std::vector<uint32_t> elems;  // sorted by element encoding
  uint32_t order = 0;
  bool has_minus_one = false;
};

// All subgroups of the cyclic unit group, one per divisor of q-1,
// ordered by increasing order.
std::vector<UnitSubgroup> gf_units_subgroups(const GfField& f);

// Accepts "GF(q)" or "GF(p^k)"; returns the field. Throws
// std::invalid_argument when the string is malformed, q is not a prime
// power, or q exceeds the bound.
GfField gf_parse_spec(const std::string& spec, uint32_t bound = 64);

bool is_prime(uint64_t n);

}  // namespace schro

#endif
