#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sidon {

using Integer = mpz_class;
using Rational = mpq_class;
using u128 = unsigned __int128;

/// Residue of v modulo 2^128 in [0, 2^128), floor convention for negatives.
u128 residue_mod_2_128(const Integer& v);
Integer from_u128(u128 v);

std::optional<std::int64_t> to_int64(const Integer& v);

/// True when every value satisfies |v| < 2^62, so pair sums fit in int64.
bool fits_small(std::span<const Integer> values);

/// Sorts and removes duplicates in place; returns the number removed.
std::size_t sort_dedupe(std::vector<Integer>& values);

Integer parse_integer(const std::string& text);  // throws on malformed input
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);  // "p/q", or "p" when q == 1

}  // namespace sidon
