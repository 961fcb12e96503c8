#pragma once

// Prime field GF(q) and its cubic extension GF(q^3), just enough to walk the
// powers of a primitive element.

#include <array>
#include <cstdint>
#include <vector>

namespace sidon::gf {

inline constexpr std::uint64_t kMaxFieldPrime = std::uint64_t{1} << 20;

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);
/// Distinct prime factors in ascending order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

class PrimeField {
 public:
  /// Throws CompositeModulus or FieldTooLarge.
  explicit PrimeField(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % q_; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const { return pow(a, q_ - 2); }

 private:
  std::uint64_t q_;
};

/// c0 + c1*alpha + c2*alpha^2.
struct CubicElem {
  std::uint64_t c0 = 0;
  std::uint64_t c1 = 0;
  std::uint64_t c2 = 0;

  friend bool operator==(const CubicElem&, const CubicElem&) = default;
  bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
};

/// Monic cubic x^3 + c2 x^2 + c1 x + c0, stored low-to-high with coeff[3] == 1.
using MonicCubic = std::array<std::uint64_t, 4>;

/// Arithmetic in F_q[x] / (f) for a monic cubic f. Irreducibility is the
/// caller's business; the field context below certifies it.
class CubicRing {
 public:
  CubicRing(PrimeField base, MonicCubic f) : base_(base), f_(f) {}

  const PrimeField& base() const { return base_; }
  const MonicCubic& modulus_poly() const { return f_; }

  CubicElem one() const { return {1, 0, 0}; }
  CubicElem alpha() const;  // class of x
  CubicElem add(const CubicElem& a, const CubicElem& b) const;
  CubicElem mul(const CubicElem& a, const CubicElem& b) const;
  CubicElem pow(CubicElem a, std::uint64_t e) const;

 private:
  PrimeField base_;
  MonicCubic f_;
};

/// True if f has no root in GF(q), by evaluating at every residue.
bool rootless_by_evaluation(const PrimeField& base, const MonicCubic& f);

/// Element of multiplicative order q^3 - 1 in ring (assumed a field), scanning
/// nonzero elements lexicographically as (c2, c1, c0). Throws
/// ExhaustedCandidates if none exists.
CubicElem find_primitive(const CubicRing& ring);

/// GF(q^3) with a certified irreducible modulus and primitive element.
class CubicFieldContext {
 public:
  static CubicFieldContext make(std::uint64_t q);

  const CubicRing& ring() const { return ring_; }
  const PrimeField& base() const { return ring_.base(); }
  const MonicCubic& modulus_poly() const { return ring_.modulus_poly(); }
  std::uint64_t q() const { return ring_.base().modulus(); }
  const CubicElem& primitive() const { return primitive_; }
  /// q^3 - 1
  std::uint64_t group_order() const;

  CubicElem mul(const CubicElem& a, const CubicElem& b) const { return ring_.mul(a, b); }
  CubicElem pow(const CubicElem& a, std::uint64_t e) const { return ring_.pow(a, e); }

 private:
  CubicFieldContext(CubicRing ring, CubicElem primitive)
      : ring_(ring), primitive_(primitive) {}

  CubicRing ring_;
  CubicElem primitive_;
};

}  // namespace sidon::gf
