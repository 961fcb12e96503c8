#include "sidon/singer.hpp"

#include <algorithm>
#include <string>

#include "sidon/error.hpp"
#include "sidon/gfield.hpp"
#include "sidon/verify.hpp"

namespace sidon {

namespace {

void certify(const Verdict& v, const std::string& what) {
  if (v) throw Error(Errc::certification_failed, what + ": " + v->describe());
}

}  // namespace

PlanarDifferenceSet singer_difference_set(std::uint64_t q) {
  const auto field = gf::CubicFieldContext::make(q);
  const std::uint64_t n = q * q + q + 1;

  // alpha^N is a base-field scalar, so membership of alpha^i in the plane
  // span{1, alpha} only depends on i mod N.
  PlanarDifferenceSet out;
  out.q = q;
  out.modulus = n;
  gf::CubicElem power = field.ring().one();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (power.c2 == 0) out.elements.push_back(i);
    power = field.mul(power, field.primitive());
  }

  if (out.elements.size() != q + 1) {
    throw Error(Errc::certification_failed,
                "difference set has " + std::to_string(out.elements.size()) +
                    " elements, expected " + std::to_string(q + 1));
  }
  certify(is_perfect_difference_set(out.elements, n), "Singer difference set");
  return out;
}

SidonCover sidon_cover(const PlanarDifferenceSet& d) {
  const std::uint64_t n = d.modulus;
  // Translates of a Sidon set are Sidon, so one exhaustive check covers all
  // blocks.
  certify(is_sidon_mod(d.elements, n), "difference set is not Sidon");

  Cover cover;
  cover.q = d.q;
  cover.g = 1;
  cover.modulus = n;
  cover.blocks.reserve(d.elements.size());
  for (std::uint64_t shift : d.elements) {
    std::vector<std::uint64_t> block;
    block.reserve(d.elements.size());
    for (std::uint64_t x : d.elements) block.push_back(x >= shift ? x - shift : x + n - shift);
    std::sort(block.begin(), block.end());
    cover.blocks.push_back(std::move(block));
  }
  certify(is_cover(cover.blocks, n), "Singer cover");
  return cover;
}

B2gCover lifted_cover(const PlanarDifferenceSet& d, std::uint64_t g) {
  if (g == 0) throw Error(Errc::invalid_params, "g must be at least 1");
  Cover base = sidon_cover(d);
  if (g == 1) return base;
  const std::uint64_t n = d.modulus;
  if (n > (std::uint64_t{1} << 62) / g) {
    throw Error(Errc::invalid_params, "g * N exceeds the supported width");
  }

  Cover cover;
  cover.q = d.q;
  cover.g = g;
  cover.modulus = g * n;
  cover.blocks.reserve(base.blocks.size());
  for (const auto& block : base.blocks) {
    std::vector<std::uint64_t> lifted;
    lifted.reserve(block.size() * g);
    for (std::uint64_t j = 0; j < g; ++j)
      for (std::uint64_t x : block) lifted.push_back(x + j * n);
    std::sort(lifted.begin(), lifted.end());
    cover.blocks.push_back(std::move(lifted));
  }
  certify(is_cover(cover.blocks, cover.modulus), "lifted cover");
  return cover;
}

}  // namespace sidon
