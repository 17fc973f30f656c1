#include <doctest.h>

#include <random>

#include "rado/bounds.hpp"
#include "rado/density.hpp"
#include "rado/errors.hpp"
#include "rado/greedy.hpp"

using namespace rado;

namespace {

BlockPattern make(std::vector<std::pair<int, BigRational>> spec, int r) {
  std::vector<Block> blocks;
  for (auto& [c, len] : spec) blocks.push_back({static_cast<Color>(c), len});
  return BlockPattern(std::move(blocks), r);
}

BigRational extended_count(const BlockPattern& p, Color c, int a, const BigRational& t) {
  const BigRational s = p.total_length() + t;
  return mono_density(p.extended(c, t), a).coefficient * s * s;
}

}  // namespace

TEST_CASE("appended_count: first-step quadratic") {
  for (int a = 2; a <= 6; ++a) {
    const PiecewiseQuadratic q = appended_count(make({{0, 1}}, 2), 1, a);
    // constant until the new block holds internal triples
    CHECK(q(BigRational(0)) == BigRational(1, 2 * a));
    CHECK(q(BigRational(a, 2)) == BigRational(1, 2 * a));
    for (const BigRational& j : {BigRational(1, a + 1), BigRational(1, 2), BigRational(1, 3)}) {
      CHECK(q(BigRational(a) + j) == (BigRational(1) + j * j) / BigRational(2 * a));
    }
  }
}

TEST_CASE("appended_count: documented value and monotone same-color growth") {
  const BlockPattern p = make({{0, 1}, {1, BigRational(3, 2)}}, 2);
  CHECK(appended_count(p, 0, 1)(BigRational(1, 4)) == BigRational(11, 32));
  const PiecewiseQuadratic same = appended_count(make({{0, 1}}, 1), 0, 1);
  BigRational prev = same(BigRational(0));
  for (int i = 1; i <= 40; ++i) {
    const BigRational v = same(BigRational(i, 7));
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("appended_count: pieces tile and agree with mono_density at random t") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(1, 400), den(1, 37), len(1, 7), dlen(1, 3);
  for (int i = 0; i < 25; ++i) {
    const int a = 1 + i % 4;
    const int r = 2 + i % 2;
    std::uniform_int_distribution<int> col(0, r - 1);
    std::vector<Block> blocks;
    for (int b = 0; b < 1 + i % 5; ++b) blocks.push_back({static_cast<Color>(col(rng)), BigRational(len(rng), dlen(rng))});
    const BlockPattern p(blocks, r);
    const auto c = static_cast<Color>(col(rng));
    const PiecewiseQuadratic q = appended_count(p, c, a);
    q.check_tiling();
    for (int k = 0; k < 20; ++k) {
      const BigRational t(num(rng), den(rng));
      CHECK(q(t) == extended_count(p, c, a, t));
    }
    for (const BigRational& b : q.breakpoints()) CHECK(q(b) == extended_count(p, c, a, b));
  }
}

TEST_CASE("minimize_ratio: closed-form steps for general a") {
  for (int a = 2; a <= 10; ++a) {
    const std::int64_t k2 = static_cast<std::int64_t>(a) * a + 2 * a + 2;
    const BlockPattern first = make({{0, 1}}, 2);
    const RatioMinimum m1 = minimize_ratio(appended_count(first, 1, a), first.total_length());
    REQUIRE(m1.t_star);
    CHECK(*m1.t_star == BigRational(a) + BigRational(1, a + 1));
    CHECK(m1.value == BigRational(1, 2 * a * k2));

    const BlockPattern second = first.extended(1, *m1.t_star);
    const RatioMinimum m2 = minimize_ratio(appended_count(second, 0, a), second.total_length());
    REQUIRE(m2.t_star);
    CHECK(*m2.t_star == BigRational(1, a + 1));
    CHECK(m2.value == lower_bound_coeff(a));

    const BlockPattern third = second.extended(0, *m2.t_star);
    for (Color c : {Color{0}, Color{1}}) {
      const RatioMinimum m3 = minimize_ratio(appended_count(third, c, a), third.total_length());
      CHECK_FALSE(m3.t_star);
      CHECK(m3.value == lower_bound_coeff(a));
    }
  }
}

TEST_CASE("minimize_ratio: never beaten by dense samples") {
  const BlockPattern p = make({{0, 1}, {1, BigRational(3, 2)}, {0, BigRational(1, 4)}}, 3);
  for (Color c : {Color{0}, Color{1}, Color{2}}) {
    const PiecewiseQuadratic q = appended_count(p, c, 1);
    const RatioMinimum m = minimize_ratio(q, p.total_length());
    for (int i = 0; i <= 1000; ++i) {
      const BigRational t(i, 100);
      const BigRational s = p.total_length() + t;
      CHECK(m.value <= q(t) / (s * s));
    }
  }
}

TEST_CASE("minimize_ratio: rejects broken tilings") {
  PiecewiseQuadratic gap({{BigRational(0), BigRational(1), 0, 0, 1}, {BigRational(2), std::nullopt, 0, 0, 1}});
  CHECK_THROWS_AS(minimize_ratio(gap, BigRational(1)), PieceTilingError);
  PiecewiseQuadratic jump({{BigRational(0), BigRational(1), 0, 0, 1}, {BigRational(1), std::nullopt, 0, 0, 2}});
  CHECK_THROWS_AS(jump.check_tiling(), PieceTilingError);
  PiecewiseQuadratic late({{BigRational(1), std::nullopt, 0, 0, 1}});
  CHECK_THROWS_AS(late.check_tiling(), PieceTilingError);
}

TEST_CASE("greedy: a >= 2 with two colors gives the three-block optimum") {
  for (int a = 2; a <= 10; ++a) {
    const GreedyTrace t = greedy_optimize(a, 2);
    CHECK_FALSE(t.capped);
    CHECK(t.final_pattern.color_sequence() == std::vector<Color>{0, 1, 0});
    CHECK(t.final_pattern.lengths() ==
          std::vector<BigRational>{BigRational(1), BigRational(a) + BigRational(1, a + 1), BigRational(1, a + 1)});
    CHECK(t.final_density == lower_bound_coeff(a));
    CHECK(mono_density(t.final_pattern, a).coefficient == t.final_density);
    for (ColorSelection s : {ColorSelection::FirstPositive, ColorSelection::BestOfAll}) {
      GreedyOptions o;
      o.selection = s;
      CHECK(greedy_optimize(a, 2, o).final_density == lower_bound_coeff(a));
    }
  }
}

TEST_CASE("greedy: Schur tables for r <= 4") {
  CHECK(greedy_optimize(1, 1).final_density == BigRational(1, 4));
  CHECK(greedy_optimize(1, 1).final_pattern.size() == 1);
  const GreedyTrace t2 = greedy_optimize(1, 2);
  CHECK(t2.final_density == BigRational(1, 22));
  CHECK(t2.final_pattern.lengths() == std::vector<BigRational>{1, BigRational(3, 2), BigRational(1, 4)});
  const GreedyTrace t3 = greedy_optimize(1, 3);
  CHECK(t3.final_density == BigRational(47, 6238));
  CHECK(t3.final_pattern.color_sequence() == std::vector<Color>{0, 1, 0, 2, 0, 1, 0});
  CHECK(t3.final_pattern.lengths() == std::vector<BigRational>{1, BigRational(3, 2), BigRational(1, 4), 3,
                                                               BigRational(1, 8), BigRational(487, 440),
                                                               BigRational(47, 440)});
  const GreedyTrace t4 = greedy_optimize(1, 4);
  CHECK(t4.final_density == BigRational::parse("69631222699293042329481527/67076984091396704809405315398"));
}

TEST_CASE("greedy: best-of-all selection departs from the tables at r >= 3") {
  GreedyOptions o;
  o.selection = ColorSelection::BestOfAll;
  CHECK(greedy_optimize(1, 2, o).final_density == BigRational(1, 22));
  CHECK(greedy_optimize(1, 3, o).final_density == BigRational(21, 2584));
  CHECK(greedy_optimize(1, 4, o).final_density == BigRational(75259, 45673374));
}

TEST_CASE("greedy: integer kernel agrees with the rational route") {
  GreedyOptions o;
  o.cross_check = true;
  for (int a = 1; a <= 4; ++a)
    for (int r = 1; r <= 3; ++r)
      for (ColorSelection s : {ColorSelection::FirstPositive, ColorSelection::BestOfAll}) {
        o.selection = s;
        const GreedyTrace t = greedy_optimize(a, r, o);
        CHECK(mono_density(t.final_pattern, a).coefficient == t.final_density);
      }
}

TEST_CASE("greedy: trace invariants") {
  for (int r = 2; r <= 4; ++r) {
    const GreedyTrace t = greedy_optimize(1, r);
    BigRational prev = t.steps.front().density_after;
    std::size_t accepted = 0;
    for (const GreedyStep& s : t.steps) {
      if (!s.accepted) continue;
      ++accepted;
      if (s.step == 0) continue;
      REQUIRE(s.t);
      CHECK(s.t->sign() > 0);
      CHECK(s.density_after < prev);
      prev = s.density_after;
    }
    CHECK(accepted == t.final_pattern.size());
    CHECK(prev == t.final_density);
    CHECK(mono_density(t.final_pattern, 1).coefficient == t.final_density);
  }
}

TEST_CASE("greedy: block cap is reported distinctly") {
  GreedyOptions o;
  o.max_blocks = 3;
  const GreedyTrace t = greedy_optimize(1, 3, o);
  CHECK(t.capped);
  CHECK(t.final_pattern.size() == 3);
  CHECK_THROWS_AS(greedy_optimize_or_throw(1, 3, o), BlockCapReached);
  // exactly at the natural length: not capped
  o.max_blocks = 3;
  CHECK_FALSE(greedy_optimize(2, 2, o).capped);
  CHECK_THROWS_AS(greedy_optimize(0, 2), InvalidArgument);
  CHECK_THROWS_AS(greedy_optimize(1, 11), InvalidArgument);
}

TEST_CASE("greedy: thread count does not change the result") {
  GreedyOptions o;
  o.selection = ColorSelection::BestOfAll;
  o.threads = 1;
  const GreedyTrace one = greedy_optimize(1, 4, o);
  o.threads = 4;
  const GreedyTrace four = greedy_optimize(1, 4, o);
  CHECK(one.final_pattern == four.final_pattern);
  CHECK(one.steps.size() == four.steps.size());
}

TEST_CASE("greedy: keep_steps off stores no trace but reports accepted steps") {
  GreedyOptions opts;
  opts.keep_steps = false;
  int accepted = 0;
  opts.on_accept = [&](const GreedyStep& s) {
    CHECK(s.accepted);
    ++accepted;
  };
  const GreedyTrace lean = greedy_optimize(1, 3, opts);
  const GreedyTrace full = greedy_optimize(1, 3);
  CHECK(lean.steps.empty());
  CHECK(accepted == 7);
  CHECK(lean.final_pattern == full.final_pattern);
  CHECK(lean.final_density == full.final_density);
}
