#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rado {

using Color = std::uint8_t;

/// Explicit assignment of one of r colors to each of 1..n.
/// Position i of `colors()` holds the color of the integer i + 1.
class Coloring {
 public:
  Coloring(std::vector<Color> colors, int r);

  /// n copies of one color.
  static Coloring uniform(int n, int r, Color c = 0);

  int n() const { return static_cast<int>(colors_.size()); }
  int r() const { return r_; }

  /// Color of the integer x, 1 <= x <= n.
  Color at(int x) const { return colors_[static_cast<std::size_t>(x - 1)]; }
  std::span<const Color> colors() const { return colors_; }

  int count_of(Color c) const;

  /// Digit string, one character per integer.
  std::string to_digits() const;
  /// Run-length form "c0:len0,c1:len1,...".
  std::string to_rle() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
  int r_;
};

/// Parses either a raw digit string ("0011") or the RLE form ("0:2,1:2").
/// The RLE form is selected when the text contains ':'. Surrounding
/// whitespace is ignored. With r = 0 the color count is inferred as
/// max(2, largest color + 1). Throws ParseError naming the bad token.
Coloring parse_coloring(std::string_view text, int r = 0);

}  // namespace rado
