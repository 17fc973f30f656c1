#include <doctest.h>

#include <cmath>

#include "rado/counting.hpp"
#include "rado/errors.hpp"
#include "rado/search.hpp"

using namespace rado;

TEST_CASE("search: Schur anchors and small cases") {
  CHECK(exact_min(4, 1, 2).min_count == 0);
  CHECK(exact_min(5, 1, 2).min_count >= 1);
  CHECK(exact_min(3, 2, 2).min_count == 0);
  CHECK(exact_min(1, 1, 1).min_count == 0);
  CHECK(exact_min(6, 1, 1).min_count == count_triples(Coloring::uniform(6, 1), 1).total);
}

TEST_CASE("search: quotiented Gray-code search equals full enumeration") {
  for (int a = 1; a <= 3; ++a)
    for (int r = 1; r <= 3; ++r)
      for (int n = 1; n <= (r == 3 ? 9 : 10); ++n) {
        const SearchResult fast = exact_min(n, a, r, {1});
        const SearchResult ref = exact_min_reference(n, a, r);
        REQUIRE(fast.min_count == ref.min_count);
        CHECK(count_triples(fast.witness, a).mono == fast.min_count);
        CHECK(fast.witness.at(1) == 0);
        CHECK(fast.exhaustive);
      }
}

TEST_CASE("search: result is identical for 1, 4 and 8 threads") {
  for (int r : {2, 3}) {
    const int n = r == 2 ? 18 : 11;
    const SearchResult one = exact_min(n, 1, r, {1});
    for (int threads : {4, 8}) {
      const SearchResult many = exact_min(n, 1, r, {threads});
      CHECK(many.min_count == one.min_count);
      CHECK(many.witness == one.witness);
      CHECK(many.explored == one.explored);
    }
  }
}

TEST_CASE("search: budget guard") {
  SearchOptions tight;
  tight.budget = 1000;
  CHECK_THROWS_AS(exact_min(20, 1, 2, tight), BudgetExceeded);
  CHECK_THROWS_AS(scan_minima(2, 2, 20, tight), BudgetExceeded);
  CHECK(exact_min_cost(20, 2) > exact_min_cost(19, 2));
  CHECK_THROWS_AS(exact_min(0, 1, 2), InvalidArgument);
  CHECK_THROWS_AS(exact_min(5, 0, 2), InvalidArgument);
}

TEST_CASE("search: scan is monotone and matches exact_min") {
  const std::vector<ScanRow> rows = scan_minima(2, 2, 20);
  REQUIRE(rows.size() == 20);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n == static_cast<int>(i) + 1);
    if (i > 0) CHECK(rows[i].min_count >= rows[i - 1].min_count);
  }
  CHECK(rows[2].min_count == 0);
  CHECK(rows[19].min_count == exact_min(20, 2, 2).min_count);
  for (const ScanRow& row : scan_minima(1, 2, 4)) CHECK(row.min_count == 0);
}

TEST_CASE("local search: never below the exact minimum, reproducible") {
  for (int a : {1, 2})
    for (int n = 1; n <= 16; ++n) {
      const SearchResult exact = exact_min(n, a, 2, {1});
      const SearchResult local = local_search_min(n, a, 2, 5, 42, 1);
      CHECK(local.min_count >= exact.min_count);
      CHECK(count_triples(local.witness, a).mono == local.min_count);
      CHECK_FALSE(local.exhaustive);
    }
  const SearchResult x = local_search_min(60, 1, 3, 6, 9, 1);
  const SearchResult y = local_search_min(60, 1, 3, 6, 9, 1);
  CHECK(x.witness == y.witness);
  CHECK(x.explored == y.explored);
  CHECK(local_search_min(60, 1, 3, 6, 9, 4).witness == x.witness);
}

TEST_CASE("local search: descent from all-red") {
  const std::int64_t start = count_triples(Coloring::uniform(5, 2), 2).mono;
  const SearchResult s = local_search_min(5, 2, 2, 0, 1, 1);
  CHECK(s.min_count <= start);
}

TEST_CASE("local search: n = 400, a = 1 lands near 1/22") {
  const SearchResult s = local_search_min(400, 1, 2, 50, 2024, 0);
  const double ratio = static_cast<double>(s.min_count) / (400.0 * 400.0);
  CHECK(std::abs(ratio * 22.0 - 1.0) <= 0.15);
}
