#include "rado/density.hpp"

#include <array>

#include "rado/counting.hpp"
#include "rado/errors.hpp"
#include "rado/parallel.hpp"

namespace rado {

BlockPattern::BlockPattern(std::vector<Block> blocks, int r) : blocks_(std::move(blocks)), r_(r) {
  if (blocks_.empty()) throw InvalidArgument("block pattern must contain at least one block");
  if (r_ < 1 || r_ > 10) throw InvalidArgument("color count must be in 1..10");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].length.sign() <= 0)
      throw InvalidArgument("block " + std::to_string(i) + " has non-positive length " +
                            blocks_[i].length.str());
    if (blocks_[i].color >= r_)
      throw InvalidArgument("block " + std::to_string(i) + " has color " +
                            std::to_string(blocks_[i].color) + " outside 0.." + std::to_string(r_ - 1));
  }
}

BigRational BlockPattern::total_length() const {
  BigRational s;
  for (const Block& b : blocks_) s += b.length;
  return s;
}

BlockPattern BlockPattern::scaled(const BigRational& factor) const {
  std::vector<Block> out = blocks_;
  for (Block& b : out) b.length *= factor;
  return BlockPattern(std::move(out), r_);
}

BlockPattern BlockPattern::normalized() const { return scaled(total_length().reciprocal()); }

BlockPattern BlockPattern::extended(Color color, const BigRational& length) const {
  std::vector<Block> out = blocks_;
  out.push_back({color, length});
  return BlockPattern(std::move(out), r_);
}

std::vector<Color> BlockPattern::color_sequence() const {
  std::vector<Color> out;
  for (const Block& b : blocks_) out.push_back(b.color);
  return out;
}

std::vector<BigRational> BlockPattern::lengths() const {
  std::vector<BigRational> out;
  for (const Block& b : blocks_) out.push_back(b.length);
  return out;
}

BigRational total_density(int a) {
  require_step(a);
  return a == 1 ? BigRational(1, 4) : BigRational(1, 2 * static_cast<std::int64_t>(a));
}

namespace {

struct Point {
  BigRational x;
  BigRational y;
};

using Polygon = std::vector<Point>;

// Keeps the part of `poly` where wx*x + wy*y <= bound (Sutherland-Hodgman
// against one half-plane).
Polygon clip(const Polygon& poly, const BigRational& wx, const BigRational& wy, const BigRational& bound) {
  Polygon out;
  if (poly.empty()) return out;
  const auto value = [&](const Point& p) { return wx * p.x + wy * p.y - bound; };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& cur = poly[i];
    const Point& nxt = poly[(i + 1) % poly.size()];
    const BigRational vc = value(cur);
    const BigRational vn = value(nxt);
    if (vc.sign() <= 0) out.push_back(cur);
    if ((vc.sign() < 0 && vn.sign() > 0) || (vc.sign() > 0 && vn.sign() < 0)) {
      const BigRational s = vc / (vc - vn);
      out.push_back({cur.x + s * (nxt.x - cur.x), cur.y + s * (nxt.y - cur.y)});
    }
  }
  return out;
}

BigRational area(const Polygon& poly) {
  if (poly.size() < 3) return {};
  BigRational twice;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice.abs() / BigRational(2);
}

struct Interval {
  BigRational lo;
  BigRational hi;
};

struct TripleTask {
  std::size_t i, j, k;
};

BigRational triple_area(const std::vector<Interval>& iv, const TripleTask& t, int a) {
  const Interval& bx = iv[t.i];
  const Interval& by = iv[t.j];
  const Interval& bz = iv[t.k];
  const BigRational step(a);
  // quick reject on the band
  if (bx.lo + step * by.lo >= bz.hi || bx.hi + step * by.hi <= bz.lo) return {};
  if (a == 1 && t.i > t.j) return {};  // block i lies right of block j: x > y throughout
  Polygon poly{{bx.lo, by.lo}, {bx.hi, by.lo}, {bx.hi, by.hi}, {bx.lo, by.hi}};
  poly = clip(poly, BigRational(1), step, bz.hi);
  poly = clip(poly, BigRational(-1), -step, -bz.lo);
  if (a == 1 && t.i == t.j) poly = clip(poly, BigRational(1), BigRational(-1), BigRational(0));
  return area(poly);
}

std::vector<Interval> intervals_of(const BlockPattern& unit) {
  std::vector<Interval> iv;
  BigRational pos;
  for (const Block& b : unit.blocks()) {
    iv.push_back({pos, pos + b.length});
    pos += b.length;
  }
  return iv;
}

std::vector<TripleTask> same_color_triples(const BlockPattern& p) {
  std::vector<TripleTask> tasks;
  const auto& bl = p.blocks();
  for (std::size_t i = 0; i < bl.size(); ++i)
    for (std::size_t j = 0; j < bl.size(); ++j) {
      if (bl[j].color != bl[i].color) continue;
      for (std::size_t k = 0; k < bl.size(); ++k)
        if (bl[k].color == bl[i].color) tasks.push_back({i, j, k});
    }
  return tasks;
}

DensityReport assemble(const BlockPattern& p, const std::vector<TripleTask>& tasks,
                       const std::vector<BigRational>& areas) {
  DensityReport rep;
  rep.per_color.assign(static_cast<std::size_t>(p.r()), BigRational());
  for (std::size_t t = 0; t < tasks.size(); ++t)
    rep.per_color[p.blocks()[tasks[t].i].color] += areas[t];
  for (const BigRational& c : rep.per_color) rep.coefficient += c;
  return rep;
}

}  // namespace

DensityReport mono_density(const BlockPattern& pattern, int a, int threads) {
  require_step(a);
  const BlockPattern unit = pattern.normalized();
  const std::vector<Interval> iv = intervals_of(unit);
  const std::vector<TripleTask> tasks = same_color_triples(unit);
  std::vector<BigRational> areas(tasks.size());
  const auto count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(resolve_threads(threads))
  for (long t = 0; t < count; ++t)
    areas[static_cast<std::size_t>(t)] = triple_area(iv, tasks[static_cast<std::size_t>(t)], a);
  return assemble(unit, tasks, areas);
}

DensityReport mono_density_serial(const BlockPattern& pattern, int a) {
  require_step(a);
  const BlockPattern unit = pattern.normalized();
  const std::vector<Interval> iv = intervals_of(unit);
  const std::vector<TripleTask> tasks = same_color_triples(unit);
  std::vector<BigRational> areas;
  areas.reserve(tasks.size());
  for (const TripleTask& t : tasks) areas.push_back(triple_area(iv, t, a));
  return assemble(unit, tasks, areas);
}

Coloring realize(const BlockPattern& pattern, int n) {
  if (n < static_cast<int>(pattern.size()))
    throw InvalidArgument("cannot realize " + std::to_string(pattern.size()) + " blocks on n=" +
                          std::to_string(n) + " integers");
  const BigRational total = pattern.total_length();
  std::vector<Color> colors;
  colors.reserve(static_cast<std::size_t>(n));
  BigRational cumulative;
  long prev = 0;
  for (const Block& b : pattern.blocks()) {
    cumulative += b.length;
    const long boundary = (BigRational(n) * cumulative / total).round_nearest().get_si();
    for (long x = prev; x < boundary; ++x) colors.push_back(b.color);
    prev = std::max(prev, boundary);
  }
  return Coloring(std::move(colors), pattern.r());
}

}  // namespace rado
