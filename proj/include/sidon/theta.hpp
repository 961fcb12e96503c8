#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sidon/integer.hpp"
#include "sidon/random.hpp"

namespace sidon {

/// Exact rational angle in [0, 1), kept in lowest terms.
class Theta {
 public:
  Theta() : num_(0), den_(1) {}
  /// Throws InvalidParams unless 0 <= num/den < 1 and den > 0.
  Theta(Integer num, Integer den);
  static Theta dyadic(u128 numerator);  // numerator / 2^128

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  Rational value() const { return Rational(num_, den_); }

  /// The numerator over 2^128 when the denominator divides 2^128; this is
  /// what the fixed-point kernels consume.
  std::optional<u128> fixed_point() const;

  std::string str() const;  // "p/q"

  friend bool operator==(const Theta& a, const Theta& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Integer num_;
  Integer den_;
};

/// theta = u / 2^128 with u uniform in [0, 2^128).
Theta sample_theta(RandomStream& source);

/// floor(a * m * theta) mod m, in [0, m). Exact; floor rounds toward -inf.
std::uint64_t phi_apply(const Theta& theta, std::uint64_t m, const Integer& a);

/// frac(a * m * theta) < 1/k, exactly.
bool below_fraction(const Theta& theta, std::uint64_t m, const Integer& a,
                    unsigned k);

}  // namespace sidon
