#include "prefix_sort/bounds.hpp"

#include <numeric>

namespace prefix_sort {

Rational Rational::of(long long num, long long den) {
  if (den == 0) {
    raise(ErrorCode::PreconditionViolated, "zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

double Rational::to_double() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}

bool operator<=(const Rational& a, const Rational& b) {
  return a.num * b.den <= b.num * a.den;
}

int lower_bound_std(int b) {
  if (b < 1) {
    raise(ErrorCode::PreconditionViolated,
          "standard breakpoint count is at least 1, got " + std::to_string(b));
  }
  return b / 2;
}

int lower_bound_fm(int b) {
  if (b < 0) {
    raise(ErrorCode::PreconditionViolated,
          "negative breakpoint count " + std::to_string(b));
  }
  return (b + 2) / 3;
}

int upper_bound(Algo algo, int b) {
  switch (algo) {
    case Algo::RT3:
      if (b < 1) {
        raise(ErrorCode::PreconditionViolated,
              "standard breakpoint count is at least 1, got " +
                  std::to_string(b));
      }
      return (3 * (b - 1) + 1) / 2;
    case Algo::RT2:
      if (b < 1) {
        raise(ErrorCode::PreconditionViolated,
              "standard breakpoint count is at least 1, got " +
                  std::to_string(b));
      }
      return b - 1;
    case Algo::FM3:
      if (b < 0) {
        raise(ErrorCode::PreconditionViolated,
              "negative breakpoint count " + std::to_string(b));
      }
      return b;
  }
  raise(ErrorCode::UsageError, "unknown algorithm id");
}

Rational adaptive_ratio(Algo algo, int b, int r) {
  if (r < 0) {
    raise(ErrorCode::PreconditionViolated,
          "negative reversal count " + std::to_string(r));
  }
  switch (algo) {
    case Algo::RT3:
    case Algo::RT2: {
      if (b < r) {
        raise(ErrorCode::PreconditionViolated,
              "need b >= r, got b = " + std::to_string(b) + ", r = " +
                  std::to_string(r));
      }
      const long long factor = algo == Algo::RT3 ? 3 : 2;
      if (r == 0) return Rational{factor, 1};
      return Rational::of(factor * (b - 1), b + r - 1);
    }
    case Algo::FM3:
      if (b < 2 * r) {
        raise(ErrorCode::PreconditionViolated,
              "need b >= 2r, got b = " + std::to_string(b) + ", r = " +
                  std::to_string(r));
      }
      if (r == 0) return Rational{3, 1};
      return Rational::of(3LL * b, b + r);
  }
  raise(ErrorCode::UsageError, "unknown algorithm id");
}

AdaptiveCurve adaptive_curve(Algo algo, int b, int r_from, int r_to) {
  if (r_from > r_to) {
    raise(ErrorCode::PreconditionViolated,
          "empty range " + std::to_string(r_from) + ".." +
              std::to_string(r_to));
  }
  AdaptiveCurve curve;
  curve.algo = algo;
  curve.b = b;
  for (int r = r_from; r <= r_to; ++r) {
    curve.points.emplace_back(r, adaptive_ratio(algo, b, r));
  }
  return curve;
}

}  // namespace prefix_sort
