#pragma once

// Ratio reports for words in <a, b> = <T_alpha^B, T_beta^B> with B = 2M + 7,
// and the three families built from them: the infinite family of pairwise
// non-conjugate optimizers in one Teichmueller disk, the iterated commutators
// f_k deep in the Johnson filtration, and the point-pushing optimizer.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratioopt/freegroup.hpp"
#include "ratioopt/interval.hpp"
#include "ratioopt/thurston.hpp"
#include "ratioopt/topology_tables.hpp"

namespace ratioopt {

inline constexpr std::int64_t kDefaultM = 100;
inline constexpr double kBoundTolerance = 1e-9;

// Where the intersection number i(alpha, beta) of the configured pair comes from.
enum class PairSource { minimal_filling, separating, point_push, custom };

std::string to_string(PairSource s);

struct Config {
  std::int64_t M = kDefaultM;
  std::int64_t B = 2 * kDefaultM + 7;
  SurfaceParams surface{2, 0};
  IntersectionValue pair_intersection;
  PairSource source = PairSource::minimal_filling;
  SeparatingSeeds seeds;  // meaningful for PairSource::separating
  std::int64_t pointpush_base = 0;  // i(rho, delta) for PairSource::point_push

  [[nodiscard]] bool separating() const { return source == PairSource::separating; }
  // Matrix parameter for the B-th twist powers: B * i(alpha, beta).
  [[nodiscard]] mpz_class n_eff() const;
  // log(2 B i(alpha, beta))
  [[nodiscard]] double theorem_bound() const;
  // log(2 B omega); only for a minimally intersecting filling pair
  [[nodiscard]] std::optional<double> corollary_bound() const;
};

// Throws std::invalid_argument for M < 1 or unsupported surfaces.
Config make_filling_config(const SurfaceParams& surface, std::int64_t M = kDefaultM);
Config make_separating_config(const SurfaceParams& surface, std::int64_t M = kDefaultM,
                              const SeparatingSeeds& seeds = {});
// Pair (rho, f(rho)) on S_{g,1} built from a minimal filling pair on S_{g,0}.
Config make_pointpush_config(std::int64_t g, std::int64_t M = kDefaultM);
Config make_custom_config(const SurfaceParams& surface, IntersectionValue pair_intersection,
                          std::int64_t M = kDefaultM);

struct Certificates {
  bool cyclically_reduced = false;
  bool letter_eq_syllable = false;
  bool primitive = false;
  bool bound_satisfied = false;
};

struct RatioReport {
  Word word;
  bool is_pseudo_anosov = false;
  bool tree_elliptic = false;
  std::string non_pa_reason;
  IntMatrix2 matrix;
  mpz_class trace_abs;
  std::uint64_t letter_length = 0;
  std::size_t syllable_length = 0;
  std::size_t cyclic_syllable_length = 0;
  std::optional<double> ell_T;
  DistanceInterval ell_C_interval;
  // [ell_T / ell_C.upper, ell_T / ell_C.lower]
  std::optional<Interval<double>> tau_interval;
  double theorem_bound = 0;
  std::optional<double> corollary_bound;
  Certificates certificates;

  // Non-pseudo-Anosov words carry no bound check.
  [[nodiscard]] bool bound_check_passed() const {
    return !is_pseudo_anosov || certificates.bound_satisfied;
  }
};

RatioReport ratio_report(const Word& w, const Config& cfg);

struct JohnsonWord {
  Word word;
  int depth = 0;
  // Bracket structure, e.g. "[[w1,w2],w1]".
  std::string nesting;
};

/// f_1 = [w1, w2], f_k = [f_{k-1}, w1 or w2 alternately] with w1 = aba,
/// w2 = bab and [u, v] = u^-1 v^-1 u v. Throws std::invalid_argument for k < 1.
JohnsonWord johnson_word(int k);

struct FamilyReport {
  RatioReport report;
  double log_omega = 0;
  // theorem_bound / log(omega): the implied C_J or C_P
  double implied_constant = 0;
};

// Requires cfg.separating().
FamilyReport johnson_report(int k, const Config& cfg);

// ab^-1 on S_{g,1} with i = 6 n^2, n = i_{g,0}. Throws for g < 2.
FamilyReport pointpush_report(std::int64_t g, std::int64_t M = kDefaultM);

struct OptimizerEntry {
  Word word;
  RatioReport report;
};

class RatioOptimizerStream {
 public:
  RatioOptimizerStream(Config cfg, bool prefix_stable)
      : cfg_(std::move(cfg)), words_(prefix_stable) {}

  OptimizerEntry next();

 private:
  Config cfg_;
  OptimizerWordStream words_;
};

std::vector<OptimizerEntry> enumerate_ratio_optimizers(std::size_t count, const Config& cfg,
                                                       bool prefix_stable = false);

}  // namespace ratioopt
