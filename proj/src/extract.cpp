#include "sidon/extract.hpp"

#include <cmath>

#include "sidon/error.hpp"
#include "sidon/gfield.hpp"
#include "sidon/kernels.hpp"
#include "sidon/verify.hpp"

namespace sidon {

ModulusChoice choose_modulus(std::uint64_t n, const Rational& c, std::uint64_t g) {
  if (n == 0) throw Error(Errc::invalid_params, "n must be at least 1");
  if (g == 0) throw Error(Errc::invalid_params, "g must be at least 1");
  if (c <= 1) throw Error(Errc::invalid_params, "c must exceed 1");

  const Rational target = c * Rational(static_cast<unsigned long>(n)) /
                          Rational(static_cast<unsigned long>(g));
  auto norm = [](std::uint64_t p) {
    return Rational(Integer(static_cast<unsigned long>(p)) * p + p + 1);
  };
  // Start just below the real root of p^2 + p + 1 = target, then step exactly.
  const double approx = (-1.0 + std::sqrt(std::max(0.0, 4.0 * target.get_d() - 3.0))) / 2.0;
  std::uint64_t p = approx > 3.0 ? static_cast<std::uint64_t>(approx) - 2 : 1;
  while (p > 1 && norm(p - 1) >= target) --p;
  while (norm(p) < target) ++p;
  while (!gf::is_prime(p)) ++p;

  ModulusChoice out;
  out.p = p;
  out.g = g;
  out.m = g * (p * p + p + 1);
  out.c = c;
  return out;
}

BlockChoice pigeonhole_block(std::span<const std::vector<std::uint64_t>> blocks,
                             std::span<const std::uint64_t> image, std::uint64_t modulus) {
  if (blocks.empty()) throw Error(Errc::invalid_params, "no blocks");
  if (modulus >= (std::uint64_t{1} << 32)) {
    throw Error(Errc::invalid_params, "modulus must lie below 2^32");
  }
  std::vector<std::uint64_t> bitmap((modulus + 63) / 64, 0);
  for (std::uint64_t x : image) {
    if (x >= modulus) throw Error(Errc::invalid_params, "image residue out of range");
    bitmap[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  BlockChoice best;
  std::vector<std::uint32_t> idx;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    idx.assign(blocks[b].begin(), blocks[b].end());
    for (std::uint32_t x : idx) {
      if (x >= modulus) throw Error(Errc::invalid_params, "block residue out of range");
    }
    const std::size_t hits = kernels::count_members(bitmap, idx);
    if (hits > best.intersection || b == 0) best = {b, hits};
  }
  return best;
}

double rounded_ratio(std::size_t size, std::size_t n) {
  if (n == 0) return 0.0;
  const double r = static_cast<double>(size) / std::sqrt(static_cast<double>(n));
  return std::round(r * 1e6) / 1e6;
}

std::string ExtractionReport::certificate_kind() const {
  return g == 1 ? "sidon" : "b2g(" + std::to_string(g) + ")";
}

ExtractionReport extract_sidon(std::span<const Integer> a, const ExtractOptions& opts,
                               const RandomStream& source) {
  ExtractOptions sidon = opts;
  sidon.g = 1;
  return extract_b2g(a, sidon, source);
}

ExtractionReport extract_b2g(std::span<const Integer> a, const ExtractOptions& opts,
                             const RandomStream& source) {
  if (opts.g == 0) throw Error(Errc::invalid_params, "g must be at least 1");
  std::vector<Integer> values(a.begin(), a.end());
  ExtractionReport rep;
  rep.dedup_removed = sort_dedupe(values);
  rep.n = values.size();
  rep.g = opts.g;
  if (values.empty()) throw Error(Errc::empty_input, "no input values");

  rep.modulus = choose_modulus(rep.n, opts.c, opts.g);

  CompressOptions copts;
  copts.trials = opts.trials;
  copts.threads = opts.threads;
  copts.stop_at_target = opts.stop_at_target;
  const CompressionResult comp = compress(values, rep.modulus.m, copts, source);
  rep.theta = comp.theta;
  rep.b_size = comp.b_size;
  rep.kept = comp.kept.size();
  rep.collisions_removed = comp.collisions_removed;
  rep.pair_collisions = comp.pair_collisions;
  rep.trials_used = comp.trials_used;
  rep.best_trial = comp.best_trial;

  const PlanarDifferenceSet diff = singer_difference_set(rep.modulus.p);
  const Cover cover = lifted_cover(diff, opts.g);
  rep.block_count = cover.blocks.size();
  rep.block = pigeonhole_block(cover.blocks, comp.image, cover.modulus);

  std::vector<bool> in_block(cover.modulus, false);
  for (std::uint64_t x : cover.blocks[rep.block.index]) in_block[x] = true;
  for (std::size_t i = 0; i < comp.kept.size(); ++i) {
    if (in_block[comp.image[i]]) rep.subset.push_back(comp.kept[i]);
  }

  const std::size_t blocks = rep.block_count;
  if (rep.subset.size() != rep.block.intersection ||
      rep.block.intersection * blocks < rep.kept) {
    throw Error(Errc::certification_failed, "pigeonhole accounting is inconsistent");
  }
  const Verdict verdict = opts.g == 1 ? is_sidon(rep.subset) : is_b2g(rep.subset, opts.g);
  if (verdict) {
    throw Error(Errc::certification_failed,
                "extracted subset rejected: " + verdict->describe());
  }
  rep.certified = true;
  rep.ratio = rounded_ratio(rep.subset.size(), rep.n);
  return rep;
}

}  // namespace sidon
