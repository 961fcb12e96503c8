#include "sidon/gfield.hpp"

#include <string>

#include "sidon/error.hpp"

namespace sidon::gf {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

using Poly = std::vector<std::uint64_t>;  // low-to-high, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p mod d over GF(q); d non-zero.
Poly poly_mod(Poly p, const Poly& d, const PrimeField& f) {
  const std::uint64_t lead_inv = f.inv(d.back());
  trim(p);
  while (p.size() >= d.size()) {
    const std::uint64_t factor = f.mul(p.back(), lead_inv);
    const std::size_t shift = p.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) {
      p[shift + i] = f.sub(p[shift + i], f.mul(factor, d[i]));
    }
    trim(p);
  }
  return p;
}

std::size_t gcd_degree(Poly a, Poly b, const PrimeField& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// f has a root in GF(q) iff gcd(f, x^q - x) is non-trivial; x^q is reduced
// modulo f first so the work is O(log q) ring products.
bool has_root_fast(const PrimeField& base, const MonicCubic& f) {
  CubicRing ring(base, f);
  CubicElem h = ring.pow(ring.alpha(), base.modulus());
  Poly reduced{h.c0, base.sub(h.c1, 1), h.c2};
  trim(reduced);
  if (reduced.empty()) return true;
  return gcd_degree(Poly(f.begin(), f.end()), reduced, base) >= 1;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
  if (q > kMaxFieldPrime) {
    throw Error(Errc::field_too_large,
                "q = " + std::to_string(q) + " exceeds 2^20");
  }
  if (!is_prime(q)) {
    throw Error(Errc::composite_modulus, std::to_string(q) + " is not prime");
  }
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  return powmod64(a, e, q_);
}

CubicElem CubicRing::alpha() const { return {0, 1, 0}; }

CubicElem CubicRing::add(const CubicElem& a, const CubicElem& b) const {
  return {base_.add(a.c0, b.c0), base_.add(a.c1, b.c1), base_.add(a.c2, b.c2)};
}

CubicElem CubicRing::mul(const CubicElem& a, const CubicElem& b) const {
  const std::uint64_t q = base_.modulus();
  // q <= 2^20 keeps every partial sum below 2^63.
  std::uint64_t d[5] = {
      a.c0 * b.c0 % q,
      (a.c0 * b.c1 + a.c1 * b.c0) % q,
      (a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0) % q,
      (a.c1 * b.c2 + a.c2 * b.c1) % q,
      a.c2 * b.c2 % q,
  };
  // x^3 = -(c2 x^2 + c1 x + c0)
  for (int deg = 4; deg >= 3; --deg) {
    const std::uint64_t t = d[deg];
    if (t == 0) continue;
    d[deg] = 0;
    d[deg - 1] = base_.sub(d[deg - 1], base_.mul(t, f_[2]));
    d[deg - 2] = base_.sub(d[deg - 2], base_.mul(t, f_[1]));
    d[deg - 3] = base_.sub(d[deg - 3], base_.mul(t, f_[0]));
  }
  return {d[0], d[1], d[2]};
}

CubicElem CubicRing::pow(CubicElem a, std::uint64_t e) const {
  CubicElem r = one();
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool rootless_by_evaluation(const PrimeField& base, const MonicCubic& f) {
  const std::uint64_t q = base.modulus();
  for (std::uint64_t x = 0; x < q; ++x) {
    // Horner: ((x + c2) x + c1) x + c0
    std::uint64_t v = base.add(x, f[2]);
    v = base.add(base.mul(v, x), f[1]);
    v = base.add(base.mul(v, x), f[0]);
    if (v == 0) return false;
  }
  return true;
}

CubicElem find_primitive(const CubicRing& ring) {
  const std::uint64_t q = ring.base().modulus();
  const std::uint64_t order = q * q * q - 1;
  // q^3 - 1 = (q - 1)(q^2 + q + 1); factoring the two parts keeps trial
  // division below 2^20 steps.
  std::vector<std::uint64_t> primes = prime_factors(q - 1);
  for (std::uint64_t r : prime_factors(q * q + q + 1)) primes.push_back(r);

  for (std::uint64_t c2 = 0; c2 < q; ++c2) {
    for (std::uint64_t c1 = 0; c1 < q; ++c1) {
      for (std::uint64_t c0 = 0; c0 < q; ++c0) {
        CubicElem cand{c0, c1, c2};
        if (cand.is_zero()) continue;
        bool ok = true;
        for (std::uint64_t r : primes) {
          if (ring.pow(cand, order / r) == ring.one()) {
            ok = false;
            break;
          }
        }
        if (ok) return cand;
      }
    }
  }
  throw Error(Errc::exhausted_candidates,
              "no primitive element; modulus polynomial is not irreducible");
}

std::uint64_t CubicFieldContext::group_order() const {
  const std::uint64_t q = this->q();
  return q * q * q - 1;
}

CubicFieldContext CubicFieldContext::make(std::uint64_t q) {
  PrimeField base(q);
  for (std::uint64_t c2 = 0; c2 < q; ++c2) {
    for (std::uint64_t c1 = 0; c1 < q; ++c1) {
      for (std::uint64_t c0 = 1; c0 < q; ++c0) {  // c0 == 0 has the root 0
        MonicCubic f{c0, c1, c2, 1};
        if (has_root_fast(base, f)) continue;
        if (!rootless_by_evaluation(base, f)) {
          throw Error(Errc::certification_failed,
                      "root screen disagrees with full evaluation");
        }
        CubicRing ring(base, f);
        return CubicFieldContext(ring, find_primitive(ring));
      }
    }
  }
  throw Error(Errc::exhausted_candidates, "no irreducible monic cubic found");
}

}  // namespace sidon::gf
