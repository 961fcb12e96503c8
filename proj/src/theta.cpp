#include "sidon/theta.hpp"

#include "sidon/error.hpp"

namespace sidon {

Theta::Theta(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ <= 0 || num_ < 0 || num_ >= den_) {
    throw Error(Errc::invalid_params, "theta must lie in [0, 1)");
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Theta Theta::dyadic(u128 numerator) {
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 128);
  return Theta(from_u128(numerator), den);
}

std::optional<u128> Theta::fixed_point() const {
  // den is a power of two no larger than 2^128
  if (mpz_popcount(den_.get_mpz_t()) != 1) return std::nullopt;
  const std::size_t shift = mpz_scan1(den_.get_mpz_t(), 0);
  if (shift > 128) return std::nullopt;
  Integer scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), num_.get_mpz_t(), 128 - shift);
  return residue_mod_2_128(scaled);
}

std::string Theta::str() const { return num_.get_str(10) + "/" + den_.get_str(10); }

Theta sample_theta(RandomStream& source) { return Theta::dyadic(source.next_u128()); }

std::uint64_t phi_apply(const Theta& theta, std::uint64_t m, const Integer& a) {
  Integer prod = a * theta.num();
  prod *= static_cast<unsigned long>(m);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), prod.get_mpz_t(), theta.den().get_mpz_t());
  return mpz_fdiv_ui(fl.get_mpz_t(), m);
}

bool below_fraction(const Theta& theta, std::uint64_t m, const Integer& a,
                    unsigned k) {
  Integer prod = a * theta.num();
  prod *= static_cast<unsigned long>(m);
  Integer rem;
  mpz_fdiv_r(rem.get_mpz_t(), prod.get_mpz_t(), theta.den().get_mpz_t());
  // rem / den < 1/k  <=>  k * rem < den
  rem *= k;
  return rem < theta.den();
}

}  // namespace sidon
