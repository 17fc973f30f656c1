#pragma once

#include <vector>

#include "rado/coloring.hpp"
#include "rado/rational.hpp"

namespace rado {

struct Block {
  Color color = 0;
  BigRational length;
  friend bool operator==(const Block&, const Block&) = default;
};

/// Consecutive intervals (C, L): colors in order with positive lengths,
/// meaningful up to a common scale factor.
class BlockPattern {
 public:
  BlockPattern(std::vector<Block> blocks, int r);

  const std::vector<Block>& blocks() const { return blocks_; }
  int r() const { return r_; }
  std::size_t size() const { return blocks_.size(); }

  BigRational total_length() const;
  /// Same pattern scaled to total length 1.
  BlockPattern normalized() const;
  BlockPattern scaled(const BigRational& factor) const;
  /// Appends a block; the length must be positive.
  BlockPattern extended(Color color, const BigRational& length) const;

  std::vector<Color> color_sequence() const;
  std::vector<BigRational> lengths() const;

  friend bool operator==(const BlockPattern&, const BlockPattern&) = default;

 private:
  std::vector<Block> blocks_;
  int r_;
};

struct DensityReport {
  /// Coefficient of n^2 in the monochromatic count.
  BigRational coefficient;
  /// Contribution of each color; sums to coefficient.
  std::vector<BigRational> per_color;
};

/// Leading coefficient of the monochromatic triple count of a block
/// coloring, computed as the exact area of the monochromatic region of the
/// unit-length pattern (same conventions as count_triples). Each same-color
/// block triple contributes the area of a rectangle cut by the band
/// lo_k <= x + a*y <= hi_k (and x <= y when a = 1), found by exact polygon
/// clipping. Triples are evaluated in parallel and summed in a fixed order.
DensityReport mono_density(const BlockPattern& pattern, int a, int threads = 0);

/// Single-threaded mono_density.
DensityReport mono_density_serial(const BlockPattern& pattern, int a);

/// Coefficient of n^2 in the total triple count: 1/4 for a = 1, 1/(2a) otherwise.
BigRational total_density(int a);

/// Explicit coloring of [1, n]: block k covers the integers in
/// (round(n*c_{k-1}), round(n*c_k)] where c_k is the normalized cumulative
/// length. Requires n >= number of blocks.
Coloring realize(const BlockPattern& pattern, int n);

}  // namespace rado
