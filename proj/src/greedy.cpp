#include "rado/greedy.hpp"

#include <chrono>
#include <stdexcept>

#include "greedy_kernel.hpp"
#include "rado/counting.hpp"
#include "rado/errors.hpp"
#include "rado/parallel.hpp"

namespace rado {

std::vector<BigRational> PiecewiseQuadratic::breakpoints() const {
  std::vector<BigRational> out;
  for (std::size_t i = 1; i < pieces_.size(); ++i) out.push_back(pieces_[i].t_lo);
  return out;
}

void PiecewiseQuadratic::check_tiling() const {
  if (pieces_.empty()) throw PieceTilingError("piecewise function has no pieces");
  if (!pieces_.front().t_lo.is_zero()) throw PieceTilingError("first piece does not start at t = 0");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const QuadraticPiece& p = pieces_[i];
    const bool last = i + 1 == pieces_.size();
    if (last != !p.t_hi.has_value())
      throw PieceTilingError(last ? "last piece must extend to infinity"
                                  : "only the last piece may be unbounded (piece " + std::to_string(i) + ")");
    if (last) break;
    if (!(p.t_lo < *p.t_hi)) throw PieceTilingError("empty piece at index " + std::to_string(i));
    const QuadraticPiece& q = pieces_[i + 1];
    if (q.t_lo != *p.t_hi)
      throw PieceTilingError("gap or overlap between pieces " + std::to_string(i) + " and " + std::to_string(i + 1));
    if (p(*p.t_hi) != q(q.t_lo))
      throw PieceTilingError("discontinuity at t = " + q.t_lo.str());
  }
}

BigRational PiecewiseQuadratic::operator()(const BigRational& t) const {
  if (t.sign() < 0) throw InvalidArgument("piecewise quadratic is defined on t >= 0 only");
  for (const QuadraticPiece& p : pieces_)
    if (p.contains(t)) return p(t);
  throw PieceTilingError("no piece covers t = " + t.str());
}

PiecewiseQuadratic appended_count(const BlockPattern& pattern, Color color, int a, bool validate) {
  require_step(a);
  if (color >= pattern.r())
    throw InvalidArgument("color " + std::to_string(color) + " is outside 0.." + std::to_string(pattern.r() - 1));
  const detail::ScaledPattern scaled(pattern, a);
  const detail::RampSum sum = scaled.appended(color);

  // raw lengths are pattern lengths times `scale`
  const BigRational scale = BigRational(scaled.total()) / pattern.total_length();
  const BigRational h = detail::raw_weight(a);

  std::vector<QuadraticPiece> pieces;
  long c2 = sum.c2;
  mpz_class c1 = sum.c1;
  mpz_class c0 = sum.c0;
  BigRational lo;
  const auto emit = [&](std::optional<BigRational> hi) {
    // A_pattern(t) = h * A_raw(scale*t) / scale^2
    pieces.push_back({lo, hi, h * BigRational(c2), h * BigRational(mpq_class(c1)) / scale,
                      h * BigRational(mpq_class(c0)) / (scale * scale)});
  };
  for (const detail::Ramp& rp : sum.ramps) {
    const BigRational hi = BigRational(rp.beta, mpz_class(1)) / scale;
    emit(hi);
    c2 += rp.sign;
    c1 -= 2 * rp.sign * rp.beta;
    c0 += rp.sign * rp.beta * rp.beta;
    lo = hi;
  }
  emit(std::nullopt);
  PiecewiseQuadratic out(std::move(pieces));
  out.check_tiling();

  if (validate) {
    const BigRational total = pattern.total_length();
    for (const QuadraticPiece& p : out.pieces()) {
      const BigRational t = p.t_hi ? (p.t_lo + *p.t_hi) / BigRational(2) : p.t_lo + total;
      if (t.is_zero()) continue;
      const BigRational expect = mono_density(pattern.extended(color, t), a, 1).coefficient *
                                 (total + t) * (total + t);
      if (p(t) != expect)
        throw std::logic_error("appended_count piece disagrees with mono_density at t = " + t.str());
    }
  }
  return out;
}

RatioMinimum minimize_ratio(const PiecewiseQuadratic& count, const BigRational& total_length) {
  count.check_tiling();
  if (total_length.sign() <= 0) throw InvalidArgument("total length must be positive");
  const BigRational& s = total_length;
  const auto ratio = [&](const QuadraticPiece& p, const BigRational& t) {
    const BigRational d = s + t;
    return p(t) / (d * d);
  };
  BigRational best_t;
  BigRational best = ratio(count.pieces().front(), BigRational());
  const auto consider = [&](const QuadraticPiece& p, const BigRational& t) {
    const BigRational v = ratio(p, t);
    if (v < best || (v == best && t < best_t)) {
      best = v;
      best_t = t;
    }
  };
  for (const QuadraticPiece& p : count.pieces()) {
    consider(p, p.t_lo);
    if (p.t_hi) consider(p, *p.t_hi);
    // d/dt [q(t)/(S+t)^2] = 0  <=>  (2 c2 S - c1) t + (c1 S - 2 c0) = 0
    const BigRational slope = BigRational(2) * p.c2 * s - p.c1;
    const BigRational icpt = p.c1 * s - BigRational(2) * p.c0;
    if (!slope.is_zero()) {
      const BigRational t = -icpt / slope;
      if (t > p.t_lo && (!p.t_hi || t < *p.t_hi)) consider(p, t);
    }
    const bool falls_forever = slope.sign() < 0 || (slope.is_zero() && icpt.sign() < 0);
    if (!p.t_hi && falls_forever && p.c2 < best)
      throw std::logic_error("ratio infimum is approached only as t -> infinity");
  }
  RatioMinimum out;
  out.value = best;
  if (best_t.sign() > 0) out.t_star = best_t;
  return out;
}

std::string to_string(ColorSelection s) {
  return s == ColorSelection::FirstPositive ? "first-positive" : "best-of-all";
}

BigRational mono_density_closed_form(const BlockPattern& pattern, int a) {
  require_step(a);
  const detail::ScaledPattern scaled(pattern, a);
  return scaled.density();
}

namespace {

struct Candidate {
  Color color = 0;
  detail::IntMinimum minimum;
  bool improves = false;
};

Candidate evaluate(const detail::ScaledPattern& sp, Color c) {
  Candidate cand;
  cand.color = c;
  cand.minimum = sp.minimize(sp.appended(c));
  cand.improves = cand.minimum.positive();
  return cand;
}

void cross_check(const detail::ScaledPattern& sp, const Candidate& cand, int r) {
  const BlockPattern pattern = sp.pattern(r);
  const PiecewiseQuadratic count = appended_count(pattern, cand.color, sp.a(), true);
  const RatioMinimum m = minimize_ratio(count, pattern.total_length());
  const BigRational kernel_value = sp.density_of(cand.minimum);
  const bool t_match = cand.improves
                           ? (m.t_star && *m.t_star == sp.in_first_block_units(cand.minimum.num, cand.minimum.den))
                           : !m.t_star;
  if (!t_match || m.value != kernel_value)
    throw std::logic_error("greedy kernel disagrees with the rational route for color " +
                           std::to_string(cand.color));
}

}  // namespace

GreedyTrace greedy_optimize(int a, int r, const GreedyOptions& options) {
  require_step(a);
  if (r < 1 || r > 10) throw InvalidArgument("color count must be in 1..10");
  if (options.max_blocks < 1) throw InvalidArgument("max_blocks must be positive");

  detail::ScaledPattern sp(BlockPattern({{0, BigRational(1)}}, r), a);
  GreedyTrace trace;
  trace.a = a;
  trace.r = r;
  trace.selection = options.selection;
  const auto record = [&](GreedyStep&& rec) {
    if (rec.accepted && options.on_accept) options.on_accept(rec);
    if (options.keep_steps) trace.steps.push_back(std::move(rec));
  };
  record({0, 0, BigRational(1), sp.density(), true});

  const auto start = std::chrono::steady_clock::now();
  const auto out_of_time = [&] {
    return options.time_limit && std::chrono::steady_clock::now() - start > *options.time_limit;
  };

  while (true) {
    const int step = static_cast<int>(sp.size());
    // colors beyond the first unused one are relabelings of it
    const int tried = std::min(r, sp.colors_used() + 1);
    const BigRational current = options.keep_steps ? sp.density() : BigRational();
    std::vector<Candidate> cands;
    bool interrupted = false;
    if (options.selection == ColorSelection::FirstPositive) {
      for (int c = 0; c < tried; ++c) {
        if ((interrupted = out_of_time())) break;
        cands.push_back(evaluate(sp, static_cast<Color>(c)));
        if (cands.back().improves) break;
      }
    } else if (!(interrupted = out_of_time())) {
      cands.resize(static_cast<std::size_t>(tried));
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(options.threads))
      for (int c = 0; c < tried; ++c) cands[static_cast<std::size_t>(c)] = evaluate(sp, static_cast<Color>(c));
    }
    if (interrupted) {
      trace.timed_out = true;
      break;
    }
    if (options.cross_check)
      for (const Candidate& cand : cands) cross_check(sp, cand, r);

    const Candidate* chosen = nullptr;
    for (const Candidate& cand : cands) {
      if (!cand.improves) continue;
      if (chosen == nullptr) {
        chosen = &cand;
        continue;
      }
      // strictly smaller density wins; equal densities keep the lower color,
      // whose t is then compared
      const mpz_class lhs = cand.minimum.vnum * chosen->minimum.vden;
      const mpz_class rhs = chosen->minimum.vnum * cand.minimum.vden;
      if (lhs < rhs ||
          (lhs == rhs && cand.minimum.num * chosen->minimum.den < chosen->minimum.num * cand.minimum.den))
        chosen = &cand;
    }
    const bool at_cap = step >= options.max_blocks;
    for (const Candidate& cand : cands) {
      GreedyStep rec;
      rec.step = step;
      rec.color = cand.color;
      if (cand.improves) {
        rec.t = sp.in_first_block_units(cand.minimum.num, cand.minimum.den);
        rec.density_after = sp.density_of(cand.minimum);
      } else if (options.keep_steps) {
        rec.density_after = current;
      }
      rec.accepted = !at_cap && &cand == chosen;
      if (rec.accepted || options.keep_steps) record(std::move(rec));
    }
    if (chosen == nullptr) break;
    if (at_cap) {
      trace.capped = true;
      break;
    }
    sp.append(chosen->color, chosen->minimum.num, chosen->minimum.den, chosen->minimum.vnum);
  }
  trace.final_pattern = sp.pattern(r);
  trace.final_density = sp.density();
  return trace;
}

GreedyTrace greedy_optimize_or_throw(int a, int r, const GreedyOptions& options) {
  GreedyTrace trace = greedy_optimize(a, r, options);
  if (trace.capped)
    throw BlockCapReached("greedy reached max_blocks=" + std::to_string(options.max_blocks) +
                          " before its stopping rule fired");
  if (trace.timed_out) throw BlockCapReached("greedy ran out of time before its stopping rule fired");
  return trace;
}

}  // namespace rado
