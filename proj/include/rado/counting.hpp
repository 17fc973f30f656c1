#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rado/coloring.hpp"
#include "rado/rational.hpp"

namespace rado {

// Solution convention used everywhere in this library:
//   a = 1  : unordered pairs x <= y with z = x + y <= n (x = y allowed),
//   a >= 2 : ordered pairs (x, y) with z = x + a*y <= n.
// A triple is monochromatic when x, y and z share one color.

struct TripleCounts {
  std::int64_t mono = 0;
  std::int64_t nonmono = 0;
  std::int64_t total = 0;
  friend bool operator==(const TripleCounts&, const TripleCounts&) = default;
};

/// Bichromatic pairs sorted into the three roles a pair can play inside a
/// triple (x, y, z = x + a*y). Every non-monochromatic triple has exactly two
/// bichromatic role pairs, so divisible + lower_cat + upper_cat = 2*nonmono.
struct PairCategoryCounts {
  /// p < q, a | (q - p): the (x, z) pair, y = (q - p)/a.
  std::int64_t divisible = 0;
  /// q - a*p >= 1: the (y, z) pair, x = q - a*p.
  std::int64_t lower_cat = 0;
  /// q + a*p <= n: the (y, x) pair, z = q + a*p.
  std::int64_t upper_cat = 0;
  /// residue_red[i] / residue_blue[i]: points m with m = i+1 (mod a).
  std::vector<std::int64_t> residue_red;
  std::vector<std::int64_t> residue_blue;

  std::int64_t total() const { return divisible + lower_cat + upper_cat; }
};

/// Number of solution triples in [1, n] (no coloring needed).
std::int64_t total_triples(int n, int a);

/// Exact mono/nonmono/total counts. OpenMP-parallel over y.
TripleCounts count_triples(const Coloring& coloring, int a, int threads = 0);

/// Single-threaded version of count_triples, kept as the reference kernel.
TripleCounts count_triples_serial(const Coloring& coloring, int a);

/// Requires r = 2 and a >= 2.
PairCategoryCounts count_pair_categories(const Coloring& coloring, int a, int threads = 0);

/// |R||B|/a - divisible. Non-negative whenever a | n.
BigRational residue_bound_slack(const Coloring& coloring, int a);

/// Lower limit on residue_bound_slack that holds for every n:
/// -min(|R|,|B|) * (ceil(n/a) - n/a). Zero when a | n.
BigRational residue_slack_floor(const Coloring& coloring, int a);

/// Maintains the monochromatic count of a mutable coloring and prices
/// single-point recolorings in O(n) without recounting.
class IncrementalCounter {
 public:
  IncrementalCounter(Coloring coloring, int a);

  std::int64_t mono() const { return mono_; }
  Color color_at(int x) const { return colors_[static_cast<std::size_t>(x)]; }
  int n() const { return n_; }
  int r() const { return r_; }
  int a() const { return a_; }

  /// Change in the monochromatic count if x (1-based) were recolored to c.
  std::int64_t delta(int x, Color c) const;
  /// Recolors x to c and returns the applied delta.
  std::int64_t recolor(int x, Color c);

  /// Colors of 1..n.
  std::span<const Color> view() const { return std::span<const Color>(colors_).subspan(1); }
  Coloring coloring() const;

 private:
  int n_;
  int a_;
  int r_;
  std::vector<Color> colors_;  // 1-based: colors_[0] unused
  std::int64_t mono_ = 0;
};

/// Throws InvalidArgument unless a >= 1.
void require_step(int a);

}  // namespace rado
