#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rado/density.hpp"
#include "rado/rational.hpp"

namespace rado {

/// c2*t^2 + c1*t + c0 on [t_lo, t_hi); t_hi empty means +infinity.
struct QuadraticPiece {
  BigRational t_lo;
  std::optional<BigRational> t_hi;
  BigRational c2, c1, c0;

  BigRational operator()(const BigRational& t) const { return (c2 * t + c1) * t + c0; }
  bool contains(const BigRational& t) const { return t >= t_lo && (!t_hi || t < *t_hi); }
};

class PiecewiseQuadratic {
 public:
  PiecewiseQuadratic() = default;
  explicit PiecewiseQuadratic(std::vector<QuadraticPiece> pieces) : pieces_(std::move(pieces)) {}

  const std::vector<QuadraticPiece>& pieces() const { return pieces_; }
  /// Breakpoints strictly inside (0, inf).
  std::vector<BigRational> breakpoints() const;

  /// Throws PieceTilingError unless the pieces cover [0, inf) in order,
  /// without gaps or overlaps, and agree at every shared endpoint.
  void check_tiling() const;

  BigRational operator()(const BigRational& t) const;

 private:
  std::vector<QuadraticPiece> pieces_;
};

/// Leading coefficient numerator A(t) of the pattern extended by one block of
/// the given color and length t, in the pattern's own length units:
/// A(t) = mono_density(pattern + (color, t)) * (S + t)^2 with S the pattern's
/// total length. Breakpoints sit where x + a*y = S or S + t passes a corner of
/// a same-color rectangle. With validate set, every piece is checked against
/// mono_density at an interior point (throws std::logic_error on mismatch).
PiecewiseQuadratic appended_count(const BlockPattern& pattern, Color color, int a, bool validate = true);

struct RatioMinimum {
  /// Smallest global minimizer of A(t)/(S+t)^2 over t >= 0; empty when it is t = 0.
  std::optional<BigRational> t_star;
  BigRational value;
};

/// Exact global minimum of A(t)/(S+t)^2 over t in [0, inf).
RatioMinimum minimize_ratio(const PiecewiseQuadratic& count, const BigRational& total_length);

enum class ColorSelection {
  /// Try colors in index order and take the first one that improves (the
  /// order used to build the published Schur tables).
  FirstPositive,
  /// Evaluate every color and take the lowest resulting density.
  BestOfAll,
};

std::string to_string(ColorSelection s);

struct GreedyStep {
  int step = 0;  // index of the block being appended (the first block is 0)
  Color color = 0;
  std::optional<BigRational> t;  // optimal appended length, empty if none improves
  BigRational density_after;     // density at t (or the current density if none)
  bool accepted = false;
};

struct GreedyOptions {
  int max_blocks = 64;
  ColorSelection selection = ColorSelection::FirstPositive;
  int threads = 0;
  /// Recompute every step through appended_count + minimize_ratio (rational
  /// route, pieces validated against mono_density) and require agreement with
  /// the integer kernel. Slow; meant for tests.
  bool cross_check = false;
  /// Stop (with GreedyTrace::timed_out) once this much wall time has passed;
  /// checked between candidate evaluations.
  std::optional<std::chrono::duration<double>> time_limit;
  /// Called with every accepted step as it happens.
  std::function<void(const GreedyStep&)> on_accept;
  /// Store every step in GreedyTrace::steps. Off, only on_accept sees them.
  bool keep_steps = true;
};


struct GreedyTrace {
  int a = 1;
  int r = 1;
  ColorSelection selection = ColorSelection::FirstPositive;
  std::vector<GreedyStep> steps;
  BlockPattern final_pattern{{{0, BigRational(1)}}, 1};
  BigRational final_density;
  /// True when the run stopped at max_blocks rather than by the stopping rule.
  bool capped = false;
  /// True when options.time_limit stopped the run.
  bool timed_out = false;
};

/// Greedy interval construction: start from one block of color 0 and
/// length 1, repeatedly append the block (color, length) that minimizes the
/// overall density, stop when no color admits a strictly positive length
/// with strictly smaller density. Sets `capped` when max_blocks is reached
/// first; greedy_optimize_or_throw turns that into BlockCapReached.
GreedyTrace greedy_optimize(int a, int r, const GreedyOptions& options = {});
GreedyTrace greedy_optimize_or_throw(int a, int r, const GreedyOptions& options = {});

/// Closed form of the leading coefficient by inclusion-exclusion over
/// rectangle corners; an independent route to mono_density(...).coefficient.
BigRational mono_density_closed_form(const BlockPattern& pattern, int a);

}  // namespace rado
