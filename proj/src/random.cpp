#include "sidon/random.hpp"

#include <array>

namespace sidon {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream_id) {
  std::array<std::uint32_t, 5> words{
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream_id),
      static_cast<std::uint32_t>(stream_id >> 32), 0x5eed51d0u};
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

// splitmix64 finalizer, used only to derive child stream ids.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(make_engine(seed, stream_id)) {}

RandomStream RandomStream::split(std::uint64_t child) const {
  return RandomStream(seed_, mix(stream_id_ ^ mix(child + 1)));
}

u128 RandomStream::next_u128() {
  u128 hi = engine_();
  return (hi << 64) | engine_();
}

std::uint64_t RandomStream::below(std::uint64_t bound) {
  // Largest multiple of bound that fits; reject the tail to stay unbiased.
  const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

std::int64_t RandomStream::in_range(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(engine_());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span + 1));
}

Integer RandomStream::bits(unsigned nbits) {
  Integer out = 0;
  unsigned done = 0;
  while (done < nbits) {
    unsigned take = nbits - done < 64 ? nbits - done : 64;
    std::uint64_t word = engine_();
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    Integer w(static_cast<unsigned long>(word));
    mpz_mul_2exp(w.get_mpz_t(), w.get_mpz_t(), done);
    out += w;
    done += take;
  }
  return out;
}

}  // namespace sidon
