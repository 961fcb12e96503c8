#include "sidon/compress.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "sidon/error.hpp"
#include "sidon/kernels.hpp"
#include "sidon/verify.hpp"

namespace sidon {

namespace {

constexpr std::uint64_t kMaxKernelModulus = std::uint64_t{1} << 32;

std::vector<Integer> sorted_set(std::span<const Integer> a) {
  if (a.empty()) throw Error(Errc::empty_input, "cannot compress an empty set");
  std::vector<Integer> v(a.begin(), a.end());
  if (sort_dedupe(v) != 0) {
    throw Error(Errc::invalid_params, "compress requires distinct elements");
  }
  return v;
}

void check_modulus(std::uint64_t m) {
  if (m < 2 || m >= kMaxKernelModulus) {
    throw Error(Errc::invalid_params, "modulus must lie in [2, 2^32)");
  }
}

// a mod 2^128, split into word arrays for the phase kernel.
struct ResidueTable {
  std::vector<std::uint64_t> lo;
  std::vector<std::uint64_t> hi;

  explicit ResidueTable(std::span<const Integer> a) : lo(a.size()), hi(a.size()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const u128 r = residue_mod_2_128(a[i]);
      lo[i] = static_cast<std::uint64_t>(r);
      hi[i] = static_cast<std::uint64_t>(r >> 64);
    }
  }
};

// Per-worker buffers; fiber_count is all zeros between trials.
struct Scratch {
  std::vector<std::uint32_t> phi;
  std::vector<std::uint32_t> fiber_count;
  Scratch(std::size_t n, std::uint64_t m) : phi(n), fiber_count(m, 0) {}
};

TrialStats run_trial(const ResidueTable& table, const kernels::PhaseParams& params,
                     Scratch& s) {
  kernels::phase(table.lo, table.hi, params, s.phi);
  TrialStats st;
  for (std::uint32_t p : s.phi) {
    if (p == kernels::kExcluded) continue;
    ++st.b_size;
    const std::uint32_t c = s.fiber_count[p];
    st.pair_collisions += c;
    st.kept += (c == 0);
    s.fiber_count[p] = c + 1;
  }
  for (std::uint32_t p : s.phi) {
    if (p != kernels::kExcluded) s.fiber_count[p] = 0;
  }
  return st;
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned w = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(jobs, 1)));
}

// Trials [first, last) in parallel; results land at their trial index.
void run_trials(const ResidueTable& table, std::uint64_t m, unsigned k,
                const RandomStream& source, std::size_t first, std::size_t last,
                unsigned threads, std::vector<TrialStats>& out) {
  std::atomic<std::size_t> next{first};
  auto work = [&] {
    Scratch scratch(table.lo.size(), m);
    for (std::size_t t = next++; t < last; t = next++) {
      RandomStream stream = source.split(t);
      const Theta theta = sample_theta(stream);
      const auto params = kernels::PhaseParams::for_order(
          *theta.fixed_point(), static_cast<std::uint32_t>(m), k);
      out[t] = run_trial(table, params, scratch);
    }
  };
  const unsigned w = worker_count(threads, last - first);
  if (w <= 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(w);
  for (unsigned i = 0; i < w; ++i) pool.emplace_back(work);
}

CompressionResult materialize(std::span<const Integer> sorted, const ResidueTable* table,
                              std::uint64_t m, const Theta& theta, unsigned k,
                              bool force_exact) {
  CompressionResult r;
  r.theta = theta;
  r.m = m;
  r.k = k;
  std::unordered_map<std::uint64_t, std::size_t> fiber;
  auto take = [&](std::size_t i, std::uint64_t p) {
    ++r.b_size;
    std::size_t& count = fiber[p];
    r.pair_collisions += count;
    if (count++ != 0) {
      ++r.collisions_removed;
      return;
    }
    r.kept.push_back(sorted[i]);
    r.image.push_back(p);
  };

  const auto fixed = theta.fixed_point();
  if (!force_exact && fixed && m < kMaxKernelModulus) {
    std::optional<ResidueTable> local;
    if (table == nullptr) table = &local.emplace(sorted);
    std::vector<std::uint32_t> phi(sorted.size());
    kernels::phase(table->lo, table->hi,
                   kernels::PhaseParams::for_order(*fixed, static_cast<std::uint32_t>(m), k),
                   phi);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (phi[i] != kernels::kExcluded) take(i, phi[i]);
    }
  } else {
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (below_fraction(theta, m, sorted[i], k)) take(i, phi_apply(theta, m, sorted[i]));
    }
  }
  r.trials_used = 1;
  r.trials.push_back({r.b_size, r.kept.size(), r.pair_collisions});
  return r;
}

void certify_output(const CompressionResult& r) {
  MorphismCheck check;
  check.k = r.k;
  if (auto w = is_freiman_k(r.kept, r.image, r.theta, r.m, check)) {
    throw Error(Errc::certification_failed, "compression map: " + w->describe());
  }
}

}  // namespace

std::size_t averaging_target(std::size_t n, std::uint64_t m) {
  // n/2 - n^2/(2m) = n (m - n) / (2m), floored; exact in 128 bits.
  if (m == 0 || n >= m) return 0;
  const u128 num = static_cast<u128>(n) * (m - n);
  return static_cast<std::size_t>(num / (2 * static_cast<u128>(m)));
}

CompressionResult compress(std::span<const Integer> a, std::uint64_t m,
                           const CompressOptions& opts, const RandomStream& source) {
  if (opts.k < 2) throw Error(Errc::invalid_order, "k must be at least 2");
  if (opts.trials == 0) throw Error(Errc::invalid_params, "trials must be positive");
  check_modulus(m);
  const std::vector<Integer> sorted = sorted_set(a);
  const ResidueTable table(sorted);

  std::vector<TrialStats> stats(opts.trials);
  std::size_t evaluated = 0;
  std::size_t best = 0;
  if (opts.stop_at_target) {
    // Contiguous batches, scanned in index order: the first trial reaching the
    // target does not depend on the batch width.
    const std::size_t target = averaging_target(sorted.size(), m);
    const std::size_t batch = worker_count(opts.threads, opts.trials);
    bool hit = false;
    while (evaluated < opts.trials && !hit) {
      const std::size_t end = std::min(opts.trials, evaluated + batch);
      run_trials(table, m, opts.k, source, evaluated, end, opts.threads, stats);
      for (std::size_t t = evaluated; t < end && !hit; ++t) {
        if (stats[t].kept > stats[best].kept) best = t;
        if (stats[t].kept >= target) {
          best = t;
          hit = true;
        }
      }
      evaluated = end;
    }
    if (hit) evaluated = best + 1;
  } else {
    run_trials(table, m, opts.k, source, 0, opts.trials, opts.threads, stats);
    evaluated = opts.trials;
    for (std::size_t t = 1; t < evaluated; ++t) {
      if (stats[t].kept > stats[best].kept) best = t;
    }
  }
  stats.resize(evaluated);

  RandomStream stream = source.split(best);
  const Theta theta = sample_theta(stream);
  CompressionResult r = materialize(sorted, &table, m, theta, opts.k, false);
  r.trials_used = evaluated;
  r.best_trial = best;
  r.trials = std::move(stats);
  if (opts.certify) certify_output(r);
  return r;
}

CompressionResult compress_k(std::span<const Integer> a, std::uint64_t m, unsigned k,
                             CompressOptions opts, const RandomStream& source) {
  if (k < 2) throw Error(Errc::invalid_order, "k must be at least 2");
  opts.k = k;
  return compress(a, m, opts, source);
}

CompressionResult compress_at(std::span<const Integer> a, std::uint64_t m,
                              const Theta& theta, unsigned k, bool force_exact) {
  if (k < 2) throw Error(Errc::invalid_order, "k must be at least 2");
  if (m < 2) throw Error(Errc::invalid_params, "modulus must be at least 2");
  const std::vector<Integer> sorted = sorted_set(a);
  return materialize(sorted, nullptr, m, theta, k, force_exact);
}

}  // namespace sidon
