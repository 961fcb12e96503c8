#include "sidon/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "sidon/error.hpp"
#include "sidon/random.hpp"

namespace sidon {

namespace {

// Collision search over pair sums, generic in the value representation.
// Sums are materialized without indices; the offending pairs are recovered by
// a second scan once the colliding value is known.
template <class T, class Add>
class PairSumScan {
 public:
  PairSumScan(const std::vector<T>& v, Add add) : v_(v), add_(add) {}

  // (i, j, k, l) with v_i + v_j = v_k + v_l, {i, j} != {k, l}.
  std::optional<std::array<std::size_t, 4>> sidon_collision() const {
    const std::size_t n = v_.size();
    std::vector<T> sums;
    sums.reserve(n * (n - (n > 0)) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) sums.push_back(add_(v_[i], v_[j]));
    std::sort(sums.begin(), sums.end());

    auto dup = std::adjacent_find(sums.begin(), sums.end());
    if (dup != sums.end()) {
      auto found = pairs_with_sum(*dup, 2, /*with_doubles=*/false);
      return std::array{found[0].first, found[0].second, found[1].first,
                        found[1].second};
    }

    std::vector<std::pair<T, std::size_t>> doubles;
    doubles.reserve(n);
    for (std::size_t i = 0; i < n; ++i) doubles.emplace_back(add_(v_[i], v_[i]), i);
    std::vector<std::pair<T, std::size_t>> sorted_doubles = doubles;
    std::sort(sorted_doubles.begin(), sorted_doubles.end());

    for (const auto& [d, i] : doubles) {
      if (std::binary_search(sums.begin(), sums.end(), d)) {
        auto found = pairs_with_sum(d, 1, /*with_doubles=*/false);
        return std::array{i, i, found[0].first, found[0].second};
      }
      auto lo = std::lower_bound(sorted_doubles.begin(), sorted_doubles.end(),
                                 std::pair<T, std::size_t>{d, 0});
      for (auto it = lo; it != sorted_doubles.end() && it->first == d; ++it) {
        if (it->second != i) return std::array{i, i, it->second, it->second};
      }
    }
    return std::nullopt;
  }

  // Smallest sum with more than g representations, and g + 1 of its pairs.
  std::optional<std::pair<T, std::vector<std::pair<std::size_t, std::size_t>>>>
  b2g_excess(unsigned g) const {
    const std::size_t n = v_.size();
    std::vector<T> sums;
    sums.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) sums.push_back(add_(v_[i], v_[j]));
    std::sort(sums.begin(), sums.end());
    for (std::size_t start = 0; start < sums.size();) {
      std::size_t end = start + 1;
      while (end < sums.size() && sums[end] == sums[start]) ++end;
      if (end - start > g) {
        return std::pair{sums[start], pairs_with_sum(sums[start], g + 1, true)};
      }
      start = end;
    }
    return std::nullopt;
  }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> pairs_with_sum(
      const T& target, std::size_t want, bool with_doubles) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < v_.size() && out.size() < want; ++i) {
      for (std::size_t j = with_doubles ? i : i + 1;
           j < v_.size() && out.size() < want; ++j) {
        if (add_(v_[i], v_[j]) == target) out.emplace_back(i, j);
      }
    }
    return out;
  }

  const std::vector<T>& v_;
  Add add_;
};

template <class T>
void require_distinct(const std::vector<T>& sorted) {
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::invalid_params, "set contains repeated elements");
  }
}

template <class T, class Add, class ToInteger>
Verdict sidon_verdict(std::vector<T> v, Add add, ToInteger conv) {
  std::sort(v.begin(), v.end());
  require_distinct(v);
  PairSumScan<T, Add> scan(v, add);
  auto hit = scan.sidon_collision();
  if (!hit) return std::nullopt;
  Witness w;
  w.kind = WitnessKind::sidon_violation;
  for (std::size_t idx : *hit) w.elements.push_back(conv(v[idx]));
  w.value = conv(add(v[(*hit)[0]], v[(*hit)[1]]));
  return w;
}

template <class T, class Add, class ToInteger>
Verdict b2g_verdict(std::vector<T> v, unsigned g, Add add, ToInteger conv) {
  if (g == 0) throw Error(Errc::invalid_params, "g must be at least 1");
  std::sort(v.begin(), v.end());
  require_distinct(v);
  PairSumScan<T, Add> scan(v, add);
  auto hit = scan.b2g_excess(g);
  if (!hit) return std::nullopt;
  Witness w;
  w.kind = WitnessKind::b2g_violation;
  w.value = conv(hit->first);
  for (auto [i, j] : hit->second) w.pairs.emplace_back(conv(v[i]), conv(v[j]));
  return w;
}

void check_residues(std::span<const std::uint64_t> r, std::uint64_t m) {
  if (m == 0 || m >= (std::uint64_t{1} << 63)) {
    throw Error(Errc::invalid_params, "modulus must lie in [1, 2^63)");
  }
  for (std::uint64_t x : r) {
    if (x >= m) throw Error(Errc::invalid_params, "value is not a reduced residue");
  }
}

struct ModAdd {
  std::uint64_t m;
  std::uint64_t operator()(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= m ? s - m : s;
  }
};

const auto kPlainAdd = [](const auto& a, const auto& b) { return a + b; };
const auto kFromU64 = [](std::uint64_t x) { return Integer(static_cast<unsigned long>(x)); };
const auto kFromI64 = [](std::int64_t x) { return Integer(static_cast<long>(x)); };
const auto kSame = [](const Integer& x) { return x; };

// Dispatches to int64 / uint64 / GMP representations.
template <class Fn>
Verdict with_representation(std::span<const Integer> set,
                            const std::optional<Integer>& modulus, Fn&& fn) {
  if (modulus) {
    if (*modulus <= 0) throw Error(Errc::invalid_params, "modulus must be positive");
    for (const Integer& x : set) {
      if (x < 0 || x >= *modulus) {
        throw Error(Errc::invalid_params, "value is not a reduced residue");
      }
    }
    if (mpz_sizeinbase(modulus->get_mpz_t(), 2) <= 62) {
      const std::uint64_t m = mpz_get_ui(modulus->get_mpz_t());
      std::vector<std::uint64_t> v;
      v.reserve(set.size());
      for (const Integer& x : set) v.push_back(mpz_get_ui(x.get_mpz_t()));
      return fn(std::move(v), ModAdd{m}, kFromU64);
    }
    const Integer m = *modulus;
    auto add = [m](const Integer& a, const Integer& b) {
      Integer s = a + b;
      if (s >= m) s -= m;
      return s;
    };
    return fn(std::vector<Integer>(set.begin(), set.end()), add, kSame);
  }
  if (fits_small(set)) {
    std::vector<std::int64_t> v;
    v.reserve(set.size());
    for (const Integer& x : set) v.push_back(mpz_get_si(x.get_mpz_t()));
    return fn(std::move(v), kPlainAdd, kFromI64);
  }
  return fn(std::vector<Integer>(set.begin(), set.end()),
            [](const Integer& a, const Integer& b) { return Integer(a + b); }, kSame);
}

}  // namespace

std::string_view witness_kind_name(WitnessKind kind) noexcept {
  switch (kind) {
    case WitnessKind::sidon_violation: return "sidon-violation";
    case WitnessKind::b2g_violation: return "b2g-violation";
    case WitnessKind::morphism_violation: return "morphism-violation";
    case WitnessKind::cover_gap: return "cover-gap";
    case WitnessKind::difference_defect: return "difference-defect";
  }
  return "unknown";
}

std::string Witness::describe() const {
  std::ostringstream out;
  out << witness_kind_name(kind) << ":";
  switch (kind) {
    case WitnessKind::sidon_violation:
      out << " " << elements[0] << " + " << elements[1] << " = " << elements[2]
          << " + " << elements[3];
      break;
    case WitnessKind::b2g_violation:
      out << " sum " << value << " has pairs";
      for (const auto& [a, b] : pairs) out << " {" << a << ", " << b << "}";
      break;
    case WitnessKind::difference_defect:
      if (elements.size() == 4) {
        out << " " << elements[0] << " - " << elements[1] << " = " << elements[2]
            << " - " << elements[3];
      } else {
        out << " difference " << elements[0] << " never occurs";
      }
      break;
    case WitnessKind::cover_gap:
      out << " residue " << elements[0] << " is uncovered";
      break;
    case WitnessKind::morphism_violation:
      out << " tuple";
      for (const Integer& e : elements) out << " " << e;
      break;
  }
  if (!note.empty()) out << " (" << note << ")";
  return out.str();
}

Verdict is_sidon(std::span<const Integer> set, const std::optional<Integer>& modulus) {
  return with_representation(set, modulus, [](auto v, auto add, auto conv) {
    return sidon_verdict(std::move(v), add, conv);
  });
}

Verdict is_sidon_mod(std::span<const std::uint64_t> residues, std::uint64_t modulus) {
  check_residues(residues, modulus);
  return sidon_verdict(std::vector<std::uint64_t>(residues.begin(), residues.end()),
                       ModAdd{modulus}, kFromU64);
}

Verdict is_b2g(std::span<const Integer> set, unsigned g,
               const std::optional<Integer>& modulus) {
  return with_representation(set, modulus, [g](auto v, auto add, auto conv) {
    return b2g_verdict(std::move(v), g, add, conv);
  });
}

Verdict is_b2g_mod(std::span<const std::uint64_t> residues, unsigned g,
                   std::uint64_t modulus) {
  check_residues(residues, modulus);
  return b2g_verdict(std::vector<std::uint64_t>(residues.begin(), residues.end()), g,
                     ModAdd{modulus}, kFromU64);
}

bool witness_holds(const Witness& w, unsigned g, const std::optional<Integer>& modulus) {
  auto reduce = [&](Integer x) {
    if (modulus) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus->get_mpz_t());
    return x;
  };
  if (w.kind == WitnessKind::sidon_violation) {
    if (w.elements.size() != 4) return false;
    const auto& e = w.elements;
    bool same_pair = (e[0] == e[2] && e[1] == e[3]) || (e[0] == e[3] && e[1] == e[2]);
    return !same_pair && reduce(e[0] + e[1]) == reduce(e[2] + e[3]);
  }
  if (w.kind == WitnessKind::b2g_violation) {
    if (w.pairs.size() != static_cast<std::size_t>(g) + 1) return false;
    std::vector<std::pair<Integer, Integer>> norm;
    for (auto [a, b] : w.pairs) {
      if (b < a) std::swap(a, b);
      if (reduce(a + b) != reduce(w.value)) return false;
      norm.emplace_back(a, b);
    }
    std::sort(norm.begin(), norm.end());
    return std::adjacent_find(norm.begin(), norm.end()) == norm.end();
  }
  return false;
}

Verdict is_freiman_k(std::span<const Integer> kept, std::span<const std::uint64_t> image,
                     const Theta& theta, std::uint64_t m, const MorphismCheck& opts) {
  if (kept.size() != image.size()) {
    throw Error(Errc::invalid_params, "kept and image differ in length");
  }
  if (opts.k < 2) throw Error(Errc::invalid_order, "k must be at least 2");
  const std::size_t n = kept.size();
  const Integer& den = theta.den();
  const Integer w = theta.num() * static_cast<unsigned long>(m);

  auto violation = [](std::vector<Integer> elems, std::string note) {
    Witness wt;
    wt.kind = WitnessKind::morphism_violation;
    wt.elements = std::move(elems);
    wt.note = std::move(note);
    return wt;
  };

  // floor(b m theta) mod m depends only on b mod den.
  std::vector<Integer> red(n);
  Integer t;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_fdiv_r(red[i].get_mpz_t(), kept[i].get_mpz_t(), den.get_mpz_t());
    if (image[i] >= m) return violation({kept[i]}, "image outside [0, m)");
    t = red[i] * w;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
    t *= opts.k;
    if (t >= den) return violation({kept[i]}, "fractional part not below 1/k");
  }

  {
    std::vector<std::pair<std::uint64_t, std::size_t>> by_image;
    by_image.reserve(n);
    for (std::size_t i = 0; i < n; ++i) by_image.emplace_back(image[i], i);
    std::sort(by_image.begin(), by_image.end());
    for (std::size_t i = 1; i < n; ++i) {
      if (by_image[i].first == by_image[i - 1].first) {
        return violation({kept[by_image[i - 1].second], kept[by_image[i].second]},
                         "image is not injective");
      }
    }
  }

  Integer s;
  Integer q;
  auto check = [&](std::span<const std::size_t> idx) -> bool {
    s = 0;
    std::uint64_t lhs = 0;
    for (std::size_t i : idx) {
      s += red[i];
      lhs = (lhs + image[i]) % m;
    }
    q = s * w;
    mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), den.get_mpz_t());
    return mpz_fdiv_ui(q.get_mpz_t(), m) == lhs;
  };
  auto tuple_witness = [&](std::span<const std::size_t> idx) {
    std::vector<Integer> elems;
    for (std::size_t i : idx) elems.push_back(kept[i]);
    return violation(std::move(elems), "sum of images differs from image of sum");
  };

  if (n == 0) return std::nullopt;
  if (opts.k == 2 && n <= opts.full_scan_limit) {
    std::array<std::size_t, 2> idx{};
    for (idx[0] = 0; idx[0] < n; ++idx[0]) {
      for (idx[1] = idx[0]; idx[1] < n; ++idx[1]) {
        if (!check(idx)) return tuple_witness(idx);
      }
    }
    return std::nullopt;
  }
  RandomStream rng(opts.seed, n);
  std::vector<std::size_t> idx(opts.k);
  for (std::size_t trial = 0; trial < opts.samples; ++trial) {
    for (auto& i : idx) i = rng.below(n);
    if (!check(idx)) return tuple_witness(idx);
  }
  return std::nullopt;
}

Verdict is_perfect_difference_set(std::span<const std::uint64_t> set, std::uint64_t n) {
  check_residues(set, n);
  std::vector<std::uint32_t> count(n, 0);
  for (std::uint64_t a : set) {
    for (std::uint64_t b : set) {
      if (a == b) continue;
      std::uint64_t d = a >= b ? a - b : a + n - b;
      if (count[d] == 1) {
        // Recover the earlier pair realizing d.
        for (std::uint64_t c : set) {
          for (std::uint64_t e : set) {
            std::uint64_t d2 = c >= e ? c - e : c + n - e;
            if (c != e && d2 == d && !(c == a && e == b)) {
              Witness w;
              w.kind = WitnessKind::difference_defect;
              w.elements = {kFromU64(c), kFromU64(e), kFromU64(a), kFromU64(b)};
              return w;
            }
          }
        }
      }
      ++count[d];
    }
  }
  for (std::uint64_t d = 1; d < n; ++d) {
    if (count[d] == 0) {
      Witness w;
      w.kind = WitnessKind::difference_defect;
      w.elements = {kFromU64(d)};
      return w;
    }
  }
  return std::nullopt;
}

Verdict is_cover(std::span<const std::vector<std::uint64_t>> blocks,
                 std::uint64_t modulus) {
  std::vector<bool> hit(modulus, false);
  for (const auto& block : blocks) {
    for (std::uint64_t x : block) {
      if (x < modulus) hit[x] = true;
    }
  }
  for (std::uint64_t r = 0; r < modulus; ++r) {
    if (!hit[r]) {
      Witness w;
      w.kind = WitnessKind::cover_gap;
      w.elements = {kFromU64(r)};
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace sidon
