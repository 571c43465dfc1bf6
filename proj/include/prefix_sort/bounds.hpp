#pragma once
/**
 * @file bounds.hpp
 * @brief Breakpoint lower bounds, per-algorithm op-count caps, and exact
 *        rational adaptive ratio bounds.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "prefix_sort/sorters.hpp"

namespace prefix_sort {

// Canonical fraction: den > 0, gcd(|num|, den) = 1.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long num, long long den);
  double to_double() const;
  std::string to_string() const;  // "num/den"

  bool operator==(const Rational&) const = default;
};

bool operator<(const Rational& a, const Rational& b);
bool operator<=(const Rational& a, const Rational& b);

// floor(b/2); any sort with reversals/transpositions needs at least this
// many ops.  Requires b >= 1.
int lower_bound_std(int b);
// ceil(b/3) under the forward-march count.  Requires b >= 0.
int lower_bound_fm(int b);

// Op-count cap per algorithm: RT3 ceil(3(b-1)/2), RT2 b-1, FM3 b, where b is
// the algorithm's own breakpoint count.
int upper_bound(Algo algo, int b);

// Ratio bound when an optimal sort is known to use r reversals:
//   RT3: 3 - 3r/(b+r-1)   (b >= r)
//   RT2: 2 - 2r/(b+r-1)   (b >= r)
//   FM3: 3 - 3r/(b+r)     (b >= 2r)
// r = 0 returns the base factor outright.  PreconditionViolated otherwise.
Rational adaptive_ratio(Algo algo, int b, int r);

struct AdaptiveCurve {
  Algo algo = Algo::RT3;
  int b = 0;
  std::vector<std::pair<int, Rational>> points;  // (r, bound)
};

AdaptiveCurve adaptive_curve(Algo algo, int b, int r_from, int r_to);

}  // namespace prefix_sort
