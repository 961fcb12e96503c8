#include "sidon/oracle.hpp"

#include <algorithm>

#include "sidon/error.hpp"

namespace sidon {

namespace {

class Search {
 public:
  Search(std::vector<std::int64_t> values, unsigned g, std::uint64_t budget)
      : a_(std::move(values)), g_(g), budget_(budget) {}

  OracleResult run() {
    greedy();
    explore(0);
    OracleResult r;
    r.optimum = best_.size();
    for (std::size_t i : best_) r.witness.push_back(Integer(static_cast<long>(a_[i])));
    r.nodes_explored = nodes_;
    r.exhausted = !stopped_;
    return r;
  }

 private:
  // Sorted (sum, multiplicity) list of the pair sums of the chosen elements.
  using SumCount = std::pair<std::int64_t, unsigned>;

  unsigned count_of(std::int64_t s) const {
    auto it = std::lower_bound(sums_.begin(), sums_.end(), SumCount{s, 0});
    return (it != sums_.end() && it->first == s) ? it->second : 0;
  }

  void bump(std::int64_t s, int delta) {
    auto it = std::lower_bound(sums_.begin(), sums_.end(), SumCount{s, 0});
    if (it != sums_.end() && it->first == s) {
      it->second = static_cast<unsigned>(static_cast<int>(it->second) + delta);
      if (it->second == 0) sums_.erase(it);
    } else {
      sums_.insert(it, SumCount{s, 1});
    }
  }

  // The new sums x + c are pairwise distinct and differ from 2x, so each
  // only has to respect the bound against the sums already present.
  bool can_add(std::size_t j) const {
    const std::int64_t x = a_[j];
    if (count_of(2 * x) + 1 > g_) return false;
    for (std::size_t c : chosen_) {
      if (count_of(x + a_[c]) + 1 > g_) return false;
    }
    return true;
  }

  void add(std::size_t j) {
    const std::int64_t x = a_[j];
    for (std::size_t c : chosen_) bump(x + a_[c], +1);
    bump(2 * x, +1);
    chosen_.push_back(j);
  }

  void remove_last() {
    const std::size_t j = chosen_.back();
    chosen_.pop_back();
    const std::int64_t x = a_[j];
    bump(2 * x, -1);
    for (std::size_t c : chosen_) bump(x + a_[c], -1);
  }

  void greedy() {
    for (std::size_t j = 0; j < a_.size(); ++j) {
      if (can_add(j)) add(j);
    }
    best_ = chosen_;
    while (!chosen_.empty()) remove_last();
  }

  void explore(std::size_t start) {
    if (stopped_) return;
    if (++nodes_ > budget_) {
      stopped_ = true;
      return;
    }
    if (chosen_.size() > best_.size()) best_ = chosen_;
    for (std::size_t j = start; j < a_.size(); ++j) {
      if (chosen_.size() + (a_.size() - j) <= best_.size()) break;
      if (!can_add(j)) continue;
      add(j);
      explore(j + 1);
      remove_last();
      if (stopped_) return;
    }
  }

  std::vector<std::int64_t> a_;
  unsigned g_;
  std::uint64_t budget_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::vector<SumCount> sums_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

std::vector<std::int64_t> prepare(std::span<const Integer> a) {
  std::vector<Integer> v(a.begin(), a.end());
  sort_dedupe(v);
  if (!fits_small(v)) {
    throw Error(Errc::invalid_params, "oracle values must satisfy |a| < 2^62");
  }
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const Integer& x : v) out.push_back(mpz_get_si(x.get_mpz_t()));
  return out;
}

}  // namespace

OracleResult max_sidon(std::span<const Integer> a, std::uint64_t budget) {
  return max_b2g(a, 1, budget);
}

OracleResult max_b2g(std::span<const Integer> a, unsigned g, std::uint64_t budget) {
  if (g == 0) throw Error(Errc::invalid_params, "g must be at least 1");
  return Search(prepare(a), g, budget).run();
}

}  // namespace sidon
