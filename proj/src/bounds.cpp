#include "rado/bounds.hpp"

#include <algorithm>

#include "rado/counting.hpp"
#include "rado/errors.hpp"
#include "rado/parallel.hpp"

namespace rado {

namespace {

void require_bound_step(int a) {
  if (a < 2) throw InvalidArgument("the x + ay = z bounds need a >= 2, got " + std::to_string(a));
}

std::int64_t denominator_k(int a) { return static_cast<std::int64_t>(a) * a + 2 * a + 3; }

}  // namespace

BigRational lower_bound_coeff(int a) {
  require_bound_step(a);
  return BigRational(1, 2 * a * denominator_k(a));
}

BigRational schur_two_color_density() { return BigRational(1, 22); }

BigRational theorem3_rhs(int n, int a) {
  require_bound_step(a);
  const std::int64_t k = denominator_k(a);
  return BigRational(static_cast<std::int64_t>(n) * n, a) * BigRational(k - 1, k);
}

namespace {

// Per-coloring thresholds, precomputed for one (n, a).
struct Thresholds {
  std::int64_t q_max;     // Q <= q_max passes the upper bound with slack
  std::int64_t q_strict;  // Q <= q_strict passes strictly
  std::int64_t mono_min;  // mono >= mono_min passes the lower bound with slack
  std::int64_t mono_strict;
  std::int64_t total;
};

Thresholds thresholds(int n, int a, const BoundSlack& slack) {
  const BigRational rhs = theorem3_rhs(n, a);
  const BigRational lower = BigRational(static_cast<std::int64_t>(n) * n) * lower_bound_coeff(a);
  const auto floor_of = [](const BigRational& q) { return q.floor().get_si(); };
  const auto ceil_of = [](const BigRational& q) { return -((-q).floor().get_si()); };
  return {floor_of(rhs + slack.q_slack * BigRational(n)), floor_of(rhs),
          ceil_of(lower - slack.mono_slack * BigRational(n)), ceil_of(lower), total_triples(n, a)};
}

}  // namespace

BoundReport theorem3_check(const Coloring& coloring, int a, const BoundSlack& slack) {
  require_bound_step(a);
  if (coloring.r() != 2) throw InvalidArgument("the Q bound check needs a 2-coloring (r=" + std::to_string(coloring.r()) + ")");
  const int n = coloring.n();
  const TripleCounts counts = count_triples(coloring, a, 1);
  const Thresholds th = thresholds(n, a, slack);
  BoundReport rep;
  rep.n = n;
  rep.a = a;
  rep.q_value = 2 * counts.nonmono;
  rep.theorem3_rhs = theorem3_rhs(n, a);
  rep.mono = counts.mono;
  rep.total = counts.total;
  rep.corollary4_rhs = BigRational(static_cast<std::int64_t>(n) * n) * lower_bound_coeff(a);
  rep.theorem3_strict = rep.q_value <= th.q_strict;
  rep.theorem3_satisfied = rep.q_value <= th.q_max;
  rep.corollary4_strict = rep.mono >= th.mono_strict;
  rep.corollary4_satisfied = rep.mono >= th.mono_min;
  rep.identity_holds = 2 * rep.mono == 2 * rep.total - rep.q_value;
  return rep;
}

std::vector<ConjectureRow> conjecture_table(int r_max, int threads) {
  if (r_max < 1) throw InvalidArgument("r must be >= 1");
  std::vector<ConjectureRow> rows;
  GreedyOptions opts;
  opts.selection = ColorSelection::FirstPositive;
  opts.threads = threads;
  for (int r = 1; r <= r_max; ++r) {
    const GreedyTrace trace = greedy_optimize_or_throw(1, r, opts);
    rows.push_back({r, trace.final_density, trace.final_pattern.size()});
  }
  return rows;
}

namespace {

struct Tally {
  std::uint64_t colorings = 0;
  std::uint64_t count_identity = 0;
  std::uint64_t category_identity = 0;
  std::uint64_t residue = 0;
  std::uint64_t theorem3 = 0;
  std::uint64_t corollary4 = 0;
  std::uint64_t total_identity = 0;
  std::int64_t worst_q_num = INT64_MIN;     // Q*a*k - n^2*(k-1)
  std::int64_t worst_mono_num = INT64_MIN;  // n^2 - 2ak*mono
};

void check_one(const Coloring& c, int a, const Thresholds& th, Tally& t) {
  const int n = c.n();
  const std::int64_t k = denominator_k(a);
  const TripleCounts counts = count_triples_serial(c, a);
  const PairCategoryCounts cats = count_pair_categories(c, a, 1);
  const std::int64_t q = 2 * counts.nonmono;
  const std::int64_t red = c.count_of(0);
  const std::int64_t blue = c.count_of(1);
  ++t.colorings;
  if (counts.mono + counts.nonmono != counts.total || counts.total != th.total) ++t.count_identity;
  if (cats.total() != q) ++t.category_identity;
  // residue bound in integer form: a*divisible <= |R||B| when a | n, and in
  // general slack >= -min(|R|,|B|)*(ceil(n/a) - n/a)
  const std::int64_t ceil_excess_num = ((n + a - 1) / a) * a - n;  // a*(ceil(n/a) - n/a)
  const bool residue_ok = n % a == 0 ? a * cats.divisible <= red * blue
                                     : red * blue - a * cats.divisible >= -std::min(red, blue) * ceil_excess_num;
  if (!residue_ok) ++t.residue;
  if (q > th.q_max) ++t.theorem3;
  if (counts.mono < th.mono_min) ++t.corollary4;
  if (2 * counts.mono != 2 * counts.total - q) ++t.total_identity;
  const std::int64_t n2 = static_cast<std::int64_t>(n) * n;
  t.worst_q_num = std::max(t.worst_q_num, q * a * k - n2 * (k - 1));
  t.worst_mono_num = std::max(t.worst_mono_num, n2 - 2 * a * k * counts.mono);
}

VerifySummary summarize(int n, int a, const Tally& t) {
  const std::int64_t k = denominator_k(a);
  VerifySummary s;
  s.n = n;
  s.a = a;
  s.colorings = t.colorings;
  s.count_identity_failures = t.count_identity;
  s.category_identity_failures = t.category_identity;
  s.residue_bound_failures = t.residue;
  s.theorem3_failures = t.theorem3;
  s.corollary4_failures = t.corollary4;
  s.total_identity_failures = t.total_identity;
  s.worst_q_excess = BigRational(t.worst_q_num, a * k * n);
  s.worst_mono_deficit = BigRational(t.worst_mono_num, 2 * a * k * n);
  return s;
}

}  // namespace

VerifySummary verify_exhaustive(int n, int a, const BoundSlack& slack, int threads) {
  require_bound_step(a);
  if (n < 1 || n > 26) throw InvalidArgument("exhaustive verification needs 1 <= n <= 26");
  const Thresholds th = thresholds(n, a, slack);
  const std::int64_t count = std::int64_t{1} << n;
  Tally total;
#pragma omp parallel num_threads(resolve_threads(threads))
  {
    Tally local;
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t mask = 0; mask < count; ++mask) {
      std::vector<Color> colors(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) colors[static_cast<std::size_t>(i)] = static_cast<Color>((mask >> i) & 1);
      check_one(Coloring(std::move(colors), 2), a, th, local);
    }
#pragma omp critical
    {
      total.colorings += local.colorings;
      total.count_identity += local.count_identity;
      total.category_identity += local.category_identity;
      total.residue += local.residue;
      total.theorem3 += local.theorem3;
      total.corollary4 += local.corollary4;
      total.total_identity += local.total_identity;
      total.worst_q_num = std::max(total.worst_q_num, local.worst_q_num);
      total.worst_mono_num = std::max(total.worst_mono_num, local.worst_mono_num);
    }
  }
  return summarize(n, a, total);
}

VerifySummary verify_coloring(const Coloring& coloring, int a, const BoundSlack& slack) {
  require_bound_step(a);
  if (coloring.r() != 2) throw InvalidArgument("verification suites need a 2-coloring");
  Tally t;
  check_one(coloring, a, thresholds(coloring.n(), a, slack), t);
  return summarize(coloring.n(), a, t);
}

}  // namespace rado
