#include "ratioopt/topology_tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ratioopt {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw std::overflow_error("twist_intersection_bounds: product overflows int64");
  }
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) {
    throw std::overflow_error("twist_intersection_bounds: sum overflows int64");
  }
  return r;
}

std::string surface_name(std::int64_t g, std::int64_t p) {
  return "S_{" + std::to_string(g) + "," + std::to_string(p) + "}";
}

}  // namespace

SurfaceParams::SurfaceParams(std::int64_t genus, std::int64_t punctures)
    : genus_(genus), punctures_(punctures) {
  if (genus < 0 || punctures < 0) {
    throw std::invalid_argument("surface: genus and punctures must be nonnegative");
  }
  if (complexity(genus, punctures) <= 0) {
    throw std::invalid_argument("surface: complexity 3g+p-4 = " +
                                std::to_string(complexity(genus, punctures)) + " of " +
                                surface_name(genus, punctures) + " must be positive");
  }
}

std::string to_string(IntersectionKind k) {
  return k == IntersectionKind::exact ? "exact" : "upper_bound";
}

std::string to_string(TwistVariant v) {
  return v == TwistVariant::paper_literal ? "paper_literal" : "standard";
}

IntersectionValue min_filling_intersection(std::int64_t g, std::int64_t p) {
  const SurfaceParams surface(g, p);  // validates complexity
  using enum IntersectionKind;
  if (g != 0 && g != 2) {
    return p == 0 ? IntersectionValue{2 * g - 1, exact} : IntersectionValue{2 * g + p - 2, exact};
  }
  if (g == 0) {
    if (p < 6) {
      throw std::invalid_argument("min_filling_intersection: no table entry for " +
                                  surface_name(g, p) + " (genus 0 requires p >= 6)");
    }
    return {p % 2 == 0 ? p - 2 : p - 1, exact};
  }
  // g == 2
  if (p <= 2) {
    if (p == 2 && 2 * g + p - 2 != 4) {
      throw std::logic_error("min_filling_intersection: overlapping genus-2 rows disagree");
    }
    return {4, exact};
  }
  if (p % 2 == 0) {
    // Pinned to the reference row (2,4) -> 8; the lemma's literal 2g+p-2 would give 6.
    return {2 * g + p, exact};
  }
  return {2 * g + p - 1, upper_bound};
}

std::vector<FillingRow> filling_table(std::int64_t gmax, std::int64_t pmax) {
  std::vector<FillingRow> rows;
  for (std::int64_t g = 0; g <= gmax; ++g) {
    for (std::int64_t p = 0; p <= pmax; ++p) {
      if (complexity(g, p) <= 0 || (g == 0 && p < 6)) {
        continue;
      }
      rows.push_back({g, p, complexity(g, p), min_filling_intersection(g, p)});
    }
  }
  return rows;
}

IntersectionValue separating_pair_bound(std::int64_t g, std::int64_t p, const SeparatingSeeds& seeds) {
  if (g < 2) {
    throw std::invalid_argument("separating_pair_bound: genus must be at least 2, got " +
                                std::to_string(g));
  }
  if (p != 0 && p != 1) {
    throw std::invalid_argument("separating_pair_bound: punctures must be 0 or 1, got " +
                                std::to_string(p));
  }
  if (seeds.genus2 <= 0 || seeds.genus3 <= 0 || seeds.arcs <= 0) {
    throw std::invalid_argument("separating_pair_bound: seeds must be positive");
  }
  const std::int64_t base = g % 2 == 0 ? seeds.genus2 : seeds.genus3;
  const std::int64_t steps = (g - (g % 2 == 0 ? 2 : 3)) / 2;
  return {checked_add(base, checked_mul(steps, seeds.arcs)), IntersectionKind::upper_bound};
}

CountInterval twist_intersection_bounds(std::span<const std::int64_t> s,
                                        std::span<const std::int64_t> i_rho_c,
                                        std::span<const std::int64_t> i_c_gamma,
                                        std::int64_t i_rho_gamma, TwistVariant variant) {
  if (s.empty()) {
    throw std::invalid_argument("twist_intersection_bounds: need at least one twist curve");
  }
  if (i_rho_c.size() != s.size() || i_c_gamma.size() != s.size()) {
    throw std::invalid_argument("twist_intersection_bounds: sequences have different lengths (" +
                                std::to_string(s.size()) + ", " + std::to_string(i_rho_c.size()) +
                                ", " + std::to_string(i_c_gamma.size()) + ")");
  }
  if (i_rho_gamma < 0) {
    throw std::invalid_argument("twist_intersection_bounds: negative intersection number");
  }
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i_rho_c[i] < 0 || i_c_gamma[i] < 0) {
      throw std::invalid_argument("twist_intersection_bounds: negative intersection number");
    }
    const std::int64_t coeff =
        variant == TwistVariant::paper_literal ? std::llabs(s[i] - 2) : std::llabs(s[i]) - 2;
    const std::int64_t product = checked_mul(i_rho_c[i], i_c_gamma[i]);
    lower = checked_add(lower, checked_mul(coeff, product));
    upper = checked_add(upper, checked_mul(std::llabs(s[i]), product));
  }
  lower = std::max<std::int64_t>(0, lower - i_rho_gamma);
  upper = checked_add(upper, i_rho_gamma);
  if (lower > upper) {
    // Only reachable under paper_literal with some s_i < 0, where |s_i - 2| > |s_i|.
    throw std::domain_error("twist_intersection_bounds: lower bound " + std::to_string(lower) +
                            " exceeds upper bound " + std::to_string(upper) +
                            "; the literal coefficient |s_i - 2| is inconsistent for these twists");
  }
  return {lower, upper};
}

IntersectionValue pointpush_intersection_bound(std::int64_t n) {
  if (n <= 0) {
    throw std::invalid_argument("pointpush_intersection_bound: n must be positive");
  }
  const std::int64_t twists[] = {3, -3};
  const std::int64_t copies[] = {n, n};
  // gamma = rho: i(rho, rho) = 0, and each parallel copy meets rho n times.
  const auto bounds = twist_intersection_bounds(twists, copies, copies, 0);
  return {bounds.upper, IntersectionKind::upper_bound};
}

}  // namespace ratioopt
