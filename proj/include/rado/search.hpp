#pragma once

#include <cstdint>
#include <vector>

#include "rado/coloring.hpp"

namespace rado {

struct SearchResult {
  int n = 0;
  int a = 1;
  int r = 2;
  std::int64_t min_count = 0;
  Coloring witness = Coloring::uniform(1, 2);
  bool exhaustive = false;
  /// Colorings whose count was examined.
  std::uint64_t explored = 0;
};

/// Budget unit: one incremental recount step of cost ~n.
/// The default admits r = 2 up to n = 28.
inline constexpr double kDefaultSearchBudget = 28.0 * 134217728.0;

struct SearchOptions {
  int threads = 0;
  double budget = kDefaultSearchBudget;
};

/// Estimated cost of exact_min(n, ., r) in budget units.
double exact_min_cost(int n, int r);

/// Exhaustive minimum over all r-colorings of [1, n]. Colorings are
/// enumerated as canonical prefixes (first-occurrence color order, so
/// color(1) = 0) times an r-ary reflected Gray code over the suffix, with
/// the count updated incrementally per step. The witness is the
/// lexicographically smallest minimizer, independent of thread count.
/// Throws BudgetExceeded when exact_min_cost > options.budget.
SearchResult exact_min(int n, int a, int r, const SearchOptions& options = {});

/// Plain enumeration of all r^n colorings with a full recount each; the
/// reference the quotiented search is tested against. Small n only.
SearchResult exact_min_reference(int n, int a, int r);

/// Hill climbing over single-point recolorings. Run 0 starts from the
/// all-zero coloring, runs 1..restarts from random colorings seeded from
/// (seed, run). Zero-delta moves are taken up to 2n times per run.
SearchResult local_search_min(int n, int a, int r, int restarts, std::uint64_t seed, int threads = 0);

struct ScanRow {
  int n = 0;
  std::int64_t min_count = 0;
};

/// exact_min for n = 1..n_max. The whole scan is checked against the budget
/// before anything runs.
std::vector<ScanRow> scan_minima(int a, int r, int n_max, const SearchOptions& options = {});

}  // namespace rado
