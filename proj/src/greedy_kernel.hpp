#pragma once

// Integer kernel behind the greedy optimizer. All block boundaries are kept
// as integers (the pattern is rescaled after every accepted step), so the
// piecewise count of an appended block is a sum of signed ramp squares
// s * (t - beta)_+^2 with integer beta, and the ratio minimization reduces to
// integer sign tests and cross-multiplied comparisons.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "rado/density.hpp"
#include "rado/rational.hpp"

namespace rado::detail {

struct Ramp {
  mpz_class beta;  // > 0
  long sign = 0;
};

/// A(t) = c2*t^2 + c1*t + c0 + sum_k sign_k * (t - beta_k)_+^2 on t >= 0, in
/// raw units (lengths scaled to integers, count without the 1/(2a) factor).
struct RampSum {
  long c2 = 0;
  mpz_class c1;
  mpz_class c0;
  std::vector<Ramp> ramps;  // sorted by beta, distinct, non-zero sign
};

/// Candidate minimizer t = num/den (den > 0) with ratio value vnum/vden,
/// where vnum = A(t)*den^2 and vden = (S*den + num)^2.
struct IntMinimum {
  mpz_class num;
  mpz_class den{1};
  mpz_class vnum;
  mpz_class vden;
  bool positive() const { return sgn(num) > 0; }
};

/// Weight turning a raw count into an area: 1/4 for a = 1, 1/(2a) otherwise.
BigRational raw_weight(int a);

class ScaledPattern {
 public:
  ScaledPattern(const BlockPattern& pattern, int a);

  int a() const { return a_; }
  std::size_t size() const { return colors_.size(); }
  const mpz_class& total() const { return bounds_.back(); }
  const mpz_class& raw() const { return raw_; }
  const std::vector<mpz_class>& bounds() const { return bounds_; }
  const std::vector<Color>& colors() const { return colors_; }
  int colors_used() const;

  /// Raw count of the pattern extended by a block of color c and raw length t.
  RampSum appended(Color c) const;

  /// Global minimum of A(t)/(S+t)^2 over t >= 0, smallest t on ties.
  IntMinimum minimize(const RampSum& sum) const;

  /// Appends a block of color c and raw length num/den and rescales so all
  /// boundaries stay integral with gcd 1. `value_num` must be A(num/den)*den^2.
  void append(Color c, const mpz_class& num, const mpz_class& den, const mpz_class& value_num);

  /// Current density h*raw/S^2.
  BigRational density() const;
  /// Value of a candidate as a density.
  BigRational density_of(const IntMinimum& m) const;
  /// Raw length num/den expressed in units of the first block.
  BigRational in_first_block_units(const mpz_class& num, const mpz_class& den) const;
  /// Pattern with the first block of length 1.
  BlockPattern pattern(int r) const;

 private:
  int a_;
  std::vector<mpz_class> bounds_;  // bounds_[0] = 0, block k is [bounds_[k], bounds_[k+1]]
  std::vector<Color> colors_;
  mpz_class raw_;
};

/// sum over same-color block triples and rectangle corners of
/// s * ((hi_k - w)_+^2 - (lo_k - w)_+^2), w = u + a*v.
mpz_class closed_form_raw(const std::vector<mpz_class>& bounds, const std::vector<Color>& colors, int a);

}  // namespace rado::detail
