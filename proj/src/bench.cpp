#include "sidon/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "sidon/error.hpp"
#include "sidon/oracle.hpp"

namespace sidon {

namespace {

constexpr std::size_t kMaxGeometric = 4096;
constexpr std::size_t kOracleAuto = 30;

Integer big(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

std::vector<Integer> dominoes(const BenchFamily& f, RandomStream& rng) {
  if (f.gap < 3) throw Error(Errc::invalid_params, "domino gap must be at least 3");
  std::vector<Integer> out;
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < f.n / 2; ++i) {
    out.push_back(big(b));
    out.push_back(big(b + 1));
    b += f.gap + rng.below(f.gap);
  }
  if (f.n % 2 == 1) out.push_back(big(b));
  return out;
}

std::vector<Integer> two_intervals(const BenchFamily& f) {
  const std::size_t first = f.split.value_or(f.n / 2);
  if (first > f.n) throw Error(Errc::invalid_params, "split exceeds n");
  const std::uint64_t sep = f.separation.value_or(f.n);
  std::vector<Integer> out;
  for (std::size_t i = 1; i <= first; ++i) out.push_back(big(i));
  const std::uint64_t start = first + sep + 1;
  for (std::size_t i = 0; i < f.n - first; ++i) out.push_back(big(start + i));
  return out;
}

std::vector<Integer> random_family(std::size_t n, RandomStream& rng) {
  std::set<std::uint64_t> seen;
  std::vector<Integer> out;
  while (out.size() < n) {
    const std::uint64_t v = rng.next_u64() >> 4;  // 60 bits
    if (seen.insert(v).second) out.push_back(big(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "interval", "squares", "primes", "dominoes", "two-intervals", "geometric", "random"};
  return names;
}

std::vector<std::uint64_t> first_primes(std::size_t n) {
  if (n == 0) return {};
  // p_n < n (ln n + ln ln n) for n >= 6.
  const double x = static_cast<double>(std::max<std::size_t>(n, 6));
  std::size_t limit = static_cast<std::size_t>(x * (std::log(x) + std::log(std::log(x)))) + 16;
  for (;;) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::size_t i = 2; i <= limit && primes.size() < n; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    if (primes.size() == n) return primes;
    limit *= 2;
  }
}

std::vector<Integer> generate_family(const BenchFamily& f, const RandomStream& source) {
  if (std::find(family_names().begin(), family_names().end(), f.name) == family_names().end()) {
    throw Error(Errc::unknown_family, "unknown family '" + f.name + "'");
  }
  if (f.n == 0) throw Error(Errc::invalid_params, "n must be at least 1");
  RandomStream rng = source.split(0x66616d);
  std::vector<Integer> out;
  if (f.name == "interval") {
    for (std::size_t i = 1; i <= f.n; ++i) out.push_back(big(i));
  } else if (f.name == "squares") {
    for (std::size_t i = 1; i <= f.n; ++i) out.push_back(big(i) * big(i));
  } else if (f.name == "primes") {
    for (std::uint64_t p : first_primes(f.n)) out.push_back(big(p));
  } else if (f.name == "dominoes") {
    out = dominoes(f, rng);
  } else if (f.name == "two-intervals") {
    out = two_intervals(f);
  } else if (f.name == "geometric") {
    if (f.ratio < 2) throw Error(Errc::invalid_params, "geometric ratio must be at least 2");
    if (f.n > kMaxGeometric) throw Error(Errc::invalid_params, "geometric n is limited to 4096");
    Integer x = 1;
    for (std::size_t i = 0; i < f.n; ++i, x *= big(f.ratio)) out.push_back(x);
  } else {
    out = random_family(f.n, rng);
  }
  return out;
}

BenchTable run_bench(const BenchFamily& family, const BenchConfig& config) {
  if (config.instances == 0) throw Error(Errc::invalid_params, "instances must be at least 1");
  const RandomStream master(config.seed);
  BenchTable table;
  table.rows.resize(config.instances);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(
      config.instances, config.workers != 0 ? config.workers : hw));
  ExtractOptions eopts = config.extract;
  if (workers > 1) eopts.threads = 1;

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= config.instances) return;
      try {
        const auto t0 = std::chrono::steady_clock::now();
        const RandomStream inst = master.split(i);
        const auto values = generate_family(family, inst);
        const ExtractionReport rep = extract_b2g(values, eopts, inst.split(1));
        BenchRow& row = table.rows[i];
        row.family = family.name;
        row.instance = i;
        row.n = rep.n;
        row.p = rep.modulus.p;
        row.m = rep.modulus.m;
        row.b_size = rep.b_size;
        row.kept = rep.kept;
        row.subset = rep.subset.size();
        row.ratio = rep.ratio;
        if (config.with_oracle || rep.n <= kOracleAuto) {
          const OracleResult o = max_b2g(values, eopts.g, config.oracle_budget);
          row.oracle_optimum = o.optimum;
          row.oracle_exhausted = o.exhausted;
        }
        if (config.timing) {
          row.wall_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        }
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(config.instances);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  double sum = 0.0;
  table.min_ratio = table.rows.front().ratio;
  for (const BenchRow& r : table.rows) {
    sum += r.ratio;
    table.min_ratio = std::min(table.min_ratio, r.ratio);
  }
  table.mean_ratio = std::round(sum / static_cast<double>(table.rows.size()) * 1e6) / 1e6;
  return table;
}

}  // namespace sidon
