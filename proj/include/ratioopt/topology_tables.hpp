#pragma once

// Surface bookkeeping: complexity, minimal intersection numbers of filling
// pairs, the separating-pair recursion and the Dehn twist intersection
// inequality. Everything here is exact integer arithmetic.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ratioopt/interval.hpp"

namespace ratioopt {

// 3g + p - 4
constexpr std::int64_t complexity(std::int64_t g, std::int64_t p) { return 3 * g + p - 4; }

class SurfaceParams {
 public:
  // Throws std::invalid_argument for negative g, p or complexity <= 0.
  SurfaceParams(std::int64_t genus, std::int64_t punctures);

  [[nodiscard]] std::int64_t genus() const { return genus_; }
  [[nodiscard]] std::int64_t punctures() const { return punctures_; }
  [[nodiscard]] std::int64_t omega() const { return complexity(genus_, punctures_); }

  friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;

 private:
  std::int64_t genus_;
  std::int64_t punctures_;
};

enum class IntersectionKind { exact, upper_bound };

std::string to_string(IntersectionKind k);

struct IntersectionValue {
  std::int64_t value = 1;
  IntersectionKind kind = IntersectionKind::exact;

  friend bool operator==(const IntersectionValue&, const IntersectionValue&) = default;
};

/// Minimal intersection number i_{g,p} of a filling pair.
///
///   g not in {0, 2}, p = 0:  2g - 1
///   g not in {0, 2}, p >= 1: 2g + p - 2
///   g = 0, p >= 6:           p - 2 (p even), p - 1 (p odd)
///   g = 2, p <= 2:           4
///   g = 2, p >= 2:           2g + p - 2 (p even), at most 2g + p - 1 (p odd)
///
/// The last odd-p row is only an upper bound and is tagged as such. Throws
/// std::invalid_argument when complexity <= 0 or (g, p) = (0, 5).
IntersectionValue min_filling_intersection(std::int64_t g, std::int64_t p);

struct FillingRow {
  std::int64_t g;
  std::int64_t p;
  std::int64_t omega;
  IntersectionValue i_min;
};

// Every supported (g, p) with 0 <= g <= gmax, 0 <= p <= pmax, row-major in g.
std::vector<FillingRow> filling_table(std::int64_t gmax, std::int64_t pmax);

// Seeds for the separating filling pair recursion. The defaults are
// placeholders: only their existence is known, not their values.
struct SeparatingSeeds {
  std::int64_t genus2 = 4;  // i(alpha_2, beta_2) on S_2
  std::int64_t genus3 = 8;  // i(alpha_3, beta_3) on S_3
  std::int64_t arcs = 4;    // i(gamma, rho) for the arc pair on S_{2,1}

  friend bool operator==(const SeparatingSeeds&, const SeparatingSeeds&) = default;
};

// Upper bound on i^sep_{g,p}: start at genus 2 or 3 and add `arcs` for each
// genus-2 piece glued on. p = 1 reuses the closed bound. Requires g >= 2,
// p in {0, 1} and positive seeds.
IntersectionValue separating_pair_bound(std::int64_t g, std::int64_t p,
                                        const SeparatingSeeds& seeds = {});

enum class TwistVariant {
  paper_literal,  // lower coefficient |s_i - 2|
  standard,       // lower coefficient |s_i| - 2
};

std::string to_string(TwistVariant v);

using CountInterval = Interval<std::int64_t>;

/// Bounds on i(T^s(rho), gamma) for twists T^s = c_1^{s_1} ... c_m^{s_m} about
/// disjoint curves:
///
///   sum L_i i(rho,c_i) i(c_i,gamma) - i(rho,gamma)
///       <= i(T^s(rho), gamma) <=
///   sum |s_i| i(rho,c_i) i(c_i,gamma) + i(rho,gamma)
///
/// The lower end is clamped at 0. Throws std::invalid_argument on length
/// mismatch, empty input or negative intersection numbers, and
/// std::overflow_error if the sums leave int64. Under paper_literal a negative
/// s_i can push the lower end past the upper one; that throws std::domain_error.
CountInterval twist_intersection_bounds(std::span<const std::int64_t> s,
                                        std::span<const std::int64_t> i_rho_c,
                                        std::span<const std::int64_t> i_c_gamma,
                                        std::int64_t i_rho_gamma,
                                        TwistVariant variant = TwistVariant::paper_literal);

// Upper bound on i(rho, f(rho)) for f = T_{d1}^3 T_{d2}^-3 about two parallel
// copies of a curve meeting rho n times: 6 n^2.
IntersectionValue pointpush_intersection_bound(std::int64_t n);

}  // namespace ratioopt
