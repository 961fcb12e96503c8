#pragma once

// Singer planar difference sets and the Sidon / B2[g] coverings built from
// their translates.

#include <cstdint>
#include <vector>

namespace sidon {

/// (q^2+q+1, q+1, 1) difference set in Z_N, elements ascending.
struct PlanarDifferenceSet {
  std::uint64_t q = 0;
  std::uint64_t modulus = 0;  // N = q^2 + q + 1
  std::vector<std::uint64_t> elements;
};

/// q + 1 blocks covering Z_{gN}. For g = 1 each block is a translate D - d of
/// the difference set (a Sidon set mod N); for g > 1 each block is the full
/// preimage of such a translate under Z_{gN} -> Z_N (a B2[g] set mod gN).
/// Blocks follow the ascending order of d; each block is sorted.
struct Cover {
  std::uint64_t q = 0;
  std::uint64_t g = 1;
  std::uint64_t modulus = 0;  // g (q^2 + q + 1)
  std::vector<std::vector<std::uint64_t>> blocks;
};

using SidonCover = Cover;
using B2gCover = Cover;

/// D = { i mod N : alpha^i lies in span{1, alpha} } for a primitive alpha of
/// GF(q^3). Certified exhaustively before returning.
PlanarDifferenceSet singer_difference_set(std::uint64_t q);

/// Translates { D - d : d in D }. Certified: D is Sidon mod N, every block is
/// exactly a translate of D, and the union is Z_N.
SidonCover sidon_cover(const PlanarDifferenceSet& d);

/// Preimages of the Sidon cover blocks in Z_{gN}. For g = 1 equals
/// sidon_cover(d).
B2gCover lifted_cover(const PlanarDifferenceSet& d, std::uint64_t g);

}  // namespace sidon
