#include "greedy_kernel.hpp"

#include <algorithm>
#include <stdexcept>

#include "rado/errors.hpp"

namespace rado::detail {

BigRational raw_weight(int a) {
  return a == 1 ? BigRational(1, 4) : BigRational(1, 2 * static_cast<std::int64_t>(a));
}

namespace {

struct Corner {
  mpz_class w;  // u + a*v
  long sign;
};

std::vector<Corner> corners(const mpz_class& xlo, const mpz_class& xhi, const mpz_class& ylo,
                            const mpz_class& yhi, long a) {
  return {{xlo + a * ylo, 1}, {xhi + a * yhi, 1}, {xlo + a * yhi, -1}, {xhi + a * ylo, -1}};
}

mpz_class ramp_sq(const mpz_class& d) { return sgn(d) > 0 ? mpz_class(d * d) : mpz_class(0); }

}  // namespace

mpz_class closed_form_raw(const std::vector<mpz_class>& bounds, const std::vector<Color>& colors, int a) {
  mpz_class raw;
  const std::size_t m = colors.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (colors[j] != colors[i]) continue;
      for (const Corner& cr : corners(bounds[i], bounds[i + 1], bounds[j], bounds[j + 1], a))
        for (std::size_t k = 0; k < m; ++k) {
          if (colors[k] != colors[i]) continue;
          const mpz_class hi = bounds[k + 1] - cr.w;
          if (sgn(hi) <= 0) continue;
          const mpz_class term = hi * hi - ramp_sq(bounds[k] - cr.w);
          if (cr.sign > 0)
            raw += term;
          else
            raw -= term;
        }
    }
  return raw;
}

ScaledPattern::ScaledPattern(const BlockPattern& pattern, int a) : a_(a) {
  if (a < 1) throw InvalidArgument("step a must be >= 1");
  mpz_class common = 1;
  for (const Block& b : pattern.blocks()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), b.length.raw().get_den_mpz_t());
  bounds_.push_back(0);
  for (const Block& b : pattern.blocks()) {
    const mpz_class len = b.length.raw().get_num() * (common / b.length.raw().get_den());
    bounds_.push_back(bounds_.back() + len);
    colors_.push_back(b.color);
  }
  mpz_class g = 0;
  for (const mpz_class& v : bounds_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  for (mpz_class& v : bounds_) v /= g;
  raw_ = closed_form_raw(bounds_, colors_, a_);
}

int ScaledPattern::colors_used() const {
  return colors_.empty() ? 0 : static_cast<int>(*std::max_element(colors_.begin(), colors_.end())) + 1;
}

RampSum ScaledPattern::appended(Color c) const {
  RampSum out;
  out.c0 = raw_;
  const mpz_class& total = bounds_.back();
  const long a = a_;
  std::vector<Ramp> ramps;
  const auto add = [&](const mpz_class& beta, long s) {
    if (sgn(beta) <= 0) {  // (t - beta)^2 on all of t >= 0
      out.c2 += s;
      out.c1 -= 2 * s * beta;
      out.c0 += s * beta * beta;
    } else {
      ramps.push_back({beta, s});
    }
  };

  std::vector<std::size_t> same;
  for (std::size_t k = 0; k < colors_.size(); ++k)
    if (colors_[k] == c) same.push_back(k);

  // z in the new block, x and y in old blocks
  for (std::size_t i : same)
    for (std::size_t j : same)
      for (const Corner& cr : corners(bounds_[i], bounds_[i + 1], bounds_[j], bounds_[j + 1], a)) {
        if (cr.w <= total) {  // (S + t - w)^2 - (S - w)^2
          out.c2 += cr.sign;
          out.c1 += 2 * cr.sign * (total - cr.w);
        } else {
          ramps.push_back({cr.w - total, cr.sign});
        }
      }
  const mpz_class shift = (a - 1) * total;
  for (std::size_t k : same) {
    // x old, y and z new
    add(bounds_[k] + shift, 1);
    add(bounds_[k + 1] + shift, -1);
    // y old, x and z new
    add(a * bounds_[k], 1);
    add(a * bounds_[k + 1], -1);
  }
  // x, y, z all new
  add(a * total, 1);

  std::sort(ramps.begin(), ramps.end(), [](const Ramp& l, const Ramp& r) { return l.beta < r.beta; });
  for (Ramp& rp : ramps) {
    if (!out.ramps.empty() && out.ramps.back().beta == rp.beta) {
      out.ramps.back().sign += rp.sign;
      if (out.ramps.back().sign == 0) out.ramps.pop_back();
    } else {
      out.ramps.push_back(std::move(rp));
    }
  }
  return out;
}

IntMinimum ScaledPattern::minimize(const RampSum& sum) const {
  const mpz_class& total = bounds_.back();
  long c2 = sum.c2;
  mpz_class c1 = sum.c1;
  mpz_class c0 = sum.c0;

  IntMinimum best;
  best.num = 0;
  best.den = 1;
  best.vnum = c0;
  best.vden = total * total;

  const auto consider = [&](const mpz_class& num, const mpz_class& den) {
    const mpz_class vnum = (c2 * num + c1 * den) * num + c0 * den * den;
    const mpz_class s = total * den + num;
    const mpz_class vden = s * s;
    if (vnum * best.vden < best.vnum * vden) {
      best.num = num;
      best.den = den;
      best.vnum = vnum;
      best.vden = vden;
    }
  };

  // sign of d/dt [A/(S+t)^2] is the sign of slope*t + icpt
  mpz_class slope, icpt;
  const auto refresh = [&] {
    slope = 2 * c2 * total - c1;
    icpt = c1 * total - 2 * c0;
  };
  refresh();
  mpz_class lo = 0;
  for (std::size_t idx = 0; idx <= sum.ramps.size(); ++idx) {
    const mpz_class* hi = idx < sum.ramps.size() ? &sum.ramps[idx].beta : nullptr;
    if (sgn(slope) > 0) {
      // interior critical point t = -icpt/slope is a local minimum
      const mpz_class num = -icpt;
      if (num > lo * slope && (hi == nullptr || num < *hi * slope)) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), slope.get_mpz_t());
        consider(num / g, slope / g);
      }
    }
    if (hi == nullptr) {
      // decreasing all the way to infinity: the infimum c2 would not be attained
      if (sgn(slope) < 0 || (sgn(slope) == 0 && sgn(icpt) < 0)) {
        if (c2 * best.vden < best.vnum)
          throw std::logic_error("ratio infimum is approached only as t -> infinity");
      }
      break;
    }
    const bool falling_into = sgn(mpz_class(slope * *hi + icpt)) <= 0;
    const Ramp& rp = sum.ramps[idx];
    c2 += rp.sign;
    c1 -= 2 * rp.sign * rp.beta;
    c0 += rp.sign * rp.beta * rp.beta;
    refresh();
    const bool rising_out = sgn(mpz_class(slope * *hi + icpt)) >= 0;
    if (falling_into && rising_out) consider(*hi, mpz_class(1));
    lo = *hi;
  }
  return best;
}

void ScaledPattern::append(Color c, const mpz_class& num, const mpz_class& den, const mpz_class& value_num) {
  if (sgn(num) <= 0 || sgn(den) <= 0) throw InvalidArgument("appended length must be positive");
  for (mpz_class& v : bounds_) v *= den;
  const mpz_class end = bounds_.back() + num;
  bounds_.push_back(end);
  colors_.push_back(c);
  raw_ = value_num;
  mpz_class g = 0;
  for (const mpz_class& v : bounds_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g != 1) {
    for (mpz_class& v : bounds_) v /= g;
    raw_ /= g * g;
  }
}

BigRational ScaledPattern::density() const {
  return raw_weight(a_) * BigRational(raw_, mpz_class(bounds_.back() * bounds_.back()));
}

BigRational ScaledPattern::density_of(const IntMinimum& m) const {
  return raw_weight(a_) * BigRational(m.vnum, m.vden);
}

BigRational ScaledPattern::in_first_block_units(const mpz_class& num, const mpz_class& den) const {
  return BigRational(num, mpz_class(den * bounds_[1]));
}

BlockPattern ScaledPattern::pattern(int r) const {
  std::vector<Block> blocks;
  for (std::size_t k = 0; k < colors_.size(); ++k)
    blocks.push_back({colors_[k], BigRational(mpz_class(bounds_[k + 1] - bounds_[k]), bounds_[1])});
  return BlockPattern(std::move(blocks), r);
}

}  // namespace rado::detail
