#include "sidon/integer.hpp"

#include <algorithm>

#include "sidon/error.hpp"

namespace sidon {

u128 residue_mod_2_128(const Integer& v) {
  Integer r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), 128);
  Integer hi_part;
  mpz_fdiv_q_2exp(hi_part.get_mpz_t(), r.get_mpz_t(), 64);
  Integer lo_part;
  mpz_fdiv_r_2exp(lo_part.get_mpz_t(), r.get_mpz_t(), 64);
  // mpz_get_ui is 64-bit on LP64 targets.
  static_assert(sizeof(unsigned long) == 8);
  u128 out = static_cast<u128>(mpz_get_ui(hi_part.get_mpz_t())) << 64;
  return out | mpz_get_ui(lo_part.get_mpz_t());
}

Integer from_u128(u128 v) {
  Integer hi(static_cast<unsigned long>(v >> 64));
  Integer out;
  mpz_mul_2exp(out.get_mpz_t(), hi.get_mpz_t(), 64);
  out += static_cast<unsigned long>(v);
  return out;
}

std::optional<std::int64_t> to_int64(const Integer& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) return std::nullopt;
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

bool fits_small(std::span<const Integer> values) {
  return std::all_of(values.begin(), values.end(), [](const Integer& v) {
    return mpz_sizeinbase(v.get_mpz_t(), 2) <= 62;
  });
}

std::size_t sort_dedupe(std::vector<Integer>& values) {
  std::sort(values.begin(), values.end());
  auto last = std::unique(values.begin(), values.end());
  std::size_t removed = static_cast<std::size_t>(values.end() - last);
  values.erase(last, values.end());
  return removed;
}

Integer parse_integer(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  bool ok = !s.empty();
  for (std::size_t i = 0; ok && i < s.size(); ++i) {
    char c = s[i];
    ok = (c >= '0' && c <= '9') || (i == 0 && c == '-' && s.size() > 1);
  }
  if (!ok) throw Error(Errc::parse_error, "not an integer: '" + text + "'");
  return Integer(s, 10);
}

std::string to_string(const Integer& v) { return v.get_str(10); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

}  // namespace sidon
