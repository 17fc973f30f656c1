#pragma once

#include <cstdint>
#include <vector>

#include "rado/coloring.hpp"
#include "rado/greedy.hpp"
#include "rado/rational.hpp"

namespace rado {

/// 1/(2a(a^2+2a+3)), the n^2 coefficient of the minimum number of
/// monochromatic x + ay = z triples over 2-colorings. Requires a >= 2.
BigRational lower_bound_coeff(int a);

/// Known 2-color optimum for Schur triples x + y = z (a = 1): 1/22.
/// Established by Robertson-Zeilberger and by Schoen; not an instance of
/// lower_bound_coeff.
BigRational schur_two_color_density();

/// (n^2/a)(1 - 1/(a^2+2a+3)).
BigRational theorem3_rhs(int n, int a);

/// Linear allowances for the asymptotic bounds at finite n, in units of n:
///   Q <= (n^2/a)(1 - 1/(a^2+2a+3)) + q_slack * n
///   mono >= n^2/(2a(a^2+2a+3)) - mono_slack * n
/// Fitted against exhaustive enumeration (a in {2,3}, n <= 18) and exact
/// minima up to n = 24: Q never exceeded the bound, and the largest
/// monochromatic deficit was 0.2386 n (a = 2, n = 16).
struct BoundSlack {
  BigRational q_slack{0};
  BigRational mono_slack{1, 4};
};

struct BoundReport {
  int n = 0;
  int a = 2;
  std::int64_t q_value = 0;  // 2 * nonmono
  BigRational theorem3_rhs;
  std::int64_t mono = 0;
  std::int64_t total = 0;
  BigRational corollary4_rhs;  // n^2 * lower_bound_coeff(a)
  bool theorem3_strict = false;     // Q <= rhs
  bool theorem3_satisfied = false;  // Q <= rhs + q_slack*n
  bool corollary4_strict = false;
  bool corollary4_satisfied = false;
  bool identity_holds = false;  // mono = total - Q/2
};

/// Requires r = 2 and a >= 2.
BoundReport theorem3_check(const Coloring& coloring, int a, const BoundSlack& slack = {});

struct ConjectureRow {
  int r = 1;
  BigRational density;
  std::size_t blocks = 0;
};

/// Greedy densities for Schur triples (a = 1), r = 1..r_max, using the
/// first-positive color order.
std::vector<ConjectureRow> conjecture_table(int r_max, int threads = 0);

/// Outcome of the exhaustive verification suites for one (n, a).
struct VerifySummary {
  int n = 0;
  int a = 2;
  std::uint64_t colorings = 0;
  std::uint64_t count_identity_failures = 0;     // mono + nonmono = total
  std::uint64_t category_identity_failures = 0;  // divisible + lower + upper = 2 nonmono
  std::uint64_t residue_bound_failures = 0;      // divisible <= |R||B|/a when a | n; slack >= floor always
  std::uint64_t theorem3_failures = 0;           // with slack
  std::uint64_t corollary4_failures = 0;         // with slack
  std::uint64_t total_identity_failures = 0;     // mono = total - Q/2
  /// max over colorings of (Q - rhs)/n and of (n^2 coeff - mono)/n
  BigRational worst_q_excess;
  BigRational worst_mono_deficit;

  bool passed() const {
    return count_identity_failures + category_identity_failures + residue_bound_failures + theorem3_failures +
               corollary4_failures + total_identity_failures ==
           0;
  }
};

/// Runs every suite over all 2^n colorings of [1, n]. n <= 26.
VerifySummary verify_exhaustive(int n, int a, const BoundSlack& slack = {}, int threads = 0);

/// Runs the suites on one coloring (r = 2).
VerifySummary verify_coloring(const Coloring& coloring, int a, const BoundSlack& slack = {});

}  // namespace rado
