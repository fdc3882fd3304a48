#pragma once

#include <stdexcept>
#include <string>

namespace ratioopt {

/// Closed interval [lower, upper] with lower <= upper.
template <class T>
struct Interval {
  T lower{};
  T upper{};

  Interval() = default;
  Interval(T lo, T hi) : lower(lo), upper(hi) {
    if (hi < lo) {
      throw std::invalid_argument("interval lower bound exceeds upper bound");
    }
  }

  [[nodiscard]] bool contains(T x) const { return lower <= x && x <= upper; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

using DistanceInterval = Interval<double>;

}  // namespace ratioopt
