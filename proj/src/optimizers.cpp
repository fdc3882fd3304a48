#include "ratioopt/optimizers.hpp"

#include <cmath>
#include <stdexcept>

#include "ratioopt/bass_serre.hpp"

namespace ratioopt {

namespace {

void check_M(std::int64_t M) {
  if (M < 1) {
    throw std::invalid_argument("config: M must be a positive integer, got " + std::to_string(M));
  }
}

Config base_config(const SurfaceParams& surface, std::int64_t M) {
  check_M(M);
  Config cfg;
  cfg.M = M;
  cfg.B = 2 * M + 7;
  cfg.surface = surface;
  return cfg;
}

}  // namespace

std::string to_string(PairSource s) {
  switch (s) {
    case PairSource::minimal_filling: return "minimal_filling";
    case PairSource::separating: return "separating";
    case PairSource::point_push: return "point_push";
    case PairSource::custom: return "custom";
  }
  return "unknown";
}

mpz_class Config::n_eff() const {
  return mpz_class(static_cast<long>(B)) * mpz_class(static_cast<long>(pair_intersection.value));
}

double Config::theorem_bound() const {
  return std::log(2.0 * static_cast<double>(B) * static_cast<double>(pair_intersection.value));
}

std::optional<double> Config::corollary_bound() const {
  if (source != PairSource::minimal_filling) {
    return std::nullopt;
  }
  return std::log(2.0 * static_cast<double>(B) * static_cast<double>(surface.omega()));
}

Config make_filling_config(const SurfaceParams& surface, std::int64_t M) {
  Config cfg = base_config(surface, M);
  cfg.pair_intersection = min_filling_intersection(surface.genus(), surface.punctures());
  cfg.source = PairSource::minimal_filling;
  return cfg;
}

Config make_separating_config(const SurfaceParams& surface, std::int64_t M,
                              const SeparatingSeeds& seeds) {
  Config cfg = base_config(surface, M);
  cfg.pair_intersection = separating_pair_bound(surface.genus(), surface.punctures(), seeds);
  cfg.source = PairSource::separating;
  cfg.seeds = seeds;
  return cfg;
}

Config make_pointpush_config(std::int64_t g, std::int64_t M) {
  if (g < 2) {
    throw std::invalid_argument("pointpush: genus must be at least 2, got " + std::to_string(g));
  }
  Config cfg = base_config(SurfaceParams(g, 1), M);
  cfg.pointpush_base = min_filling_intersection(g, 0).value;
  cfg.pair_intersection = pointpush_intersection_bound(cfg.pointpush_base);
  cfg.source = PairSource::point_push;
  return cfg;
}

Config make_custom_config(const SurfaceParams& surface, IntersectionValue pair_intersection,
                          std::int64_t M) {
  if (pair_intersection.value < 1) {
    throw std::invalid_argument("config: intersection number must be positive");
  }
  Config cfg = base_config(surface, M);
  cfg.pair_intersection = pair_intersection;
  cfg.source = PairSource::custom;
  return cfg;
}

RatioReport ratio_report(const Word& w, const Config& cfg) {
  RatioReport r;
  r.word = w;
  r.letter_length = w.letter_length();
  r.syllable_length = w.syllable_length();
  r.theorem_bound = cfg.theorem_bound();
  r.corollary_bound = cfg.corollary_bound();

  const auto cr = cyclic_reduce(w);
  r.cyclic_syllable_length = cr.cyclic.syllable_length();
  r.tree_elliptic = cr.cyclic.is_generator_power();
  r.ell_C_interval = curve_translation_interval(w);

  r.certificates.cyclically_reduced = r.syllable_length == r.cyclic_syllable_length;
  r.certificates.letter_eq_syllable = w.all_unit_exponents();
  r.certificates.primitive = !w.is_identity() && is_primitive(w);

  r.matrix = evaluate(w, cfg.n_eff());
  r.trace_abs = abs(r.matrix.trace());
  if (r.tree_elliptic) {
    r.non_pa_reason = "conjugate to a power of a single twist (reducible)";
    return r;
  }
  try {
    const Dilatation d = dilatation(r.matrix);
    r.ell_T = d.log_lambda;
  } catch (const NonHyperbolicError& e) {
    r.non_pa_reason = e.kind() == NonHyperbolicKind::parabolic ? "|trace| = 2 (parabolic)"
                                                                : "|trace| < 2 (elliptic)";
    return r;
  }
  r.is_pseudo_anosov = true;
  r.tau_interval = Interval<double>(*r.ell_T / r.ell_C_interval.upper,
                                    *r.ell_T / r.ell_C_interval.lower);
  r.certificates.bound_satisfied = r.tau_interval->upper <= r.theorem_bound + kBoundTolerance;
  return r;
}

JohnsonWord johnson_word(int k) {
  if (k < 1) {
    throw std::invalid_argument("johnson_word: k must be at least 1, got " + std::to_string(k));
  }
  const Word w1 = Word::parse("aba");
  const Word w2 = Word::parse("bab");
  // u^-1 v^-1 u v, written with the uvu^-1v^-1 commutator.
  auto bracket = [](const Word& u, const Word& v) { return commutator(invert(u), invert(v)); };

  JohnsonWord f{bracket(w1, w2), 1, "[w1,w2]"};
  for (int depth = 2; depth <= k; ++depth) {
    const bool use_w1 = depth % 2 == 0;
    f.word = bracket(f.word, use_w1 ? w1 : w2);
    f.nesting = "[" + f.nesting + (use_w1 ? ",w1]" : ",w2]");
    f.depth = depth;
  }
  return f;
}

FamilyReport johnson_report(int k, const Config& cfg) {
  if (!cfg.separating()) {
    throw std::invalid_argument("johnson_report: configuration must use a separating filling pair");
  }
  FamilyReport out;
  out.report = ratio_report(johnson_word(k).word, cfg);
  out.log_omega = std::log(static_cast<double>(cfg.surface.omega()));
  out.implied_constant = out.report.theorem_bound / out.log_omega;
  return out;
}

FamilyReport pointpush_report(std::int64_t g, std::int64_t M) {
  const Config cfg = make_pointpush_config(g, M);
  FamilyReport out;
  out.report = ratio_report(Word::parse("aB"), cfg);
  out.log_omega = std::log(static_cast<double>(cfg.surface.omega()));
  out.implied_constant = out.report.theorem_bound / out.log_omega;
  return out;
}

OptimizerEntry RatioOptimizerStream::next() {
  Word w = words_.next();
  RatioReport r = ratio_report(w, cfg_);
  return {std::move(w), std::move(r)};
}

std::vector<OptimizerEntry> enumerate_ratio_optimizers(std::size_t count, const Config& cfg,
                                                       bool prefix_stable) {
  RatioOptimizerStream stream(cfg, prefix_stable);
  std::vector<OptimizerEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(stream.next());
  }
  return out;
}

}  // namespace ratioopt
