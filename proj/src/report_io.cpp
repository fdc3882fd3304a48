#include "ratioopt/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace ratioopt {

using nlohmann::ordered_json;

std::string format_double(double x) {
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, x);
  return buf;
}

double round_significant(double x) {
  if (!std::isfinite(x)) {
    return x;
  }
  return std::strtod(format_double(x).c_str(), nullptr);
}

std::string format_integer(const mpz_class& x, const OutputOptions& opts) {
  std::string s = x.get_str();
  const std::size_t digits = s.size() - (s.front() == '-' ? 1 : 0);
  if (!opts.short_integers || digits <= kShortDigits) {
    return s;
  }
  const std::size_t head = s.size() - digits + 10;
  return s.substr(0, head) + "..." + s.substr(s.size() - 10) + " (" + std::to_string(digits) +
         " digits)";
}

ordered_json matrix_to_json(const IntMatrix2& m, const OutputOptions& opts) {
  return ordered_json::array({ordered_json::array({format_integer(m.m11, opts), format_integer(m.m12, opts)}),
                              ordered_json::array({format_integer(m.m21, opts), format_integer(m.m22, opts)})});
}

IntMatrix2 matrix_from_json(const ordered_json& j) {
  auto entry = [&](int r, int c) { return mpz_class(j.at(r).at(c).get<std::string>()); };
  return {entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)};
}

ordered_json to_json(const Config& cfg) {
  ordered_json j;
  j["genus"] = cfg.surface.genus();
  j["punctures"] = cfg.surface.punctures();
  j["omega"] = cfg.surface.omega();
  j["M"] = cfg.M;
  j["B"] = cfg.B;
  j["pair_intersection"] = {{"value", cfg.pair_intersection.value},
                            {"kind", to_string(cfg.pair_intersection.kind)},
                            {"source", to_string(cfg.source)}};
  j["separating"] = cfg.separating();
  if (cfg.separating()) {
    j["seeds"] = {{"genus2", cfg.seeds.genus2}, {"genus3", cfg.seeds.genus3}, {"arcs", cfg.seeds.arcs}};
  }
  if (cfg.source == PairSource::point_push) {
    j["pointpush_base_intersection"] = cfg.pointpush_base;
  }
  j["n_eff"] = cfg.n_eff().get_str();
  return j;
}

ordered_json to_json(const RatioReport& r, const OutputOptions& opts) {
  ordered_json j;
  j["word"] = r.word.to_string();
  j["letter_length"] = r.letter_length;
  j["syllable_length"] = r.syllable_length;
  j["cyclic_syllable_length"] = r.cyclic_syllable_length;
  j["is_pseudo_anosov"] = r.is_pseudo_anosov;
  if (!r.is_pseudo_anosov) {
    j["non_pa_reason"] = r.non_pa_reason;
  }
  j["trace_abs"] = format_integer(r.trace_abs, opts);
  j["matrix"] = matrix_to_json(r.matrix, opts);
  j["ell_T"] = r.ell_T ? ordered_json(round_significant(*r.ell_T)) : ordered_json(nullptr);
  j["ell_C_interval"] = {{"lower", round_significant(r.ell_C_interval.lower)},
                         {"upper", round_significant(r.ell_C_interval.upper)}};
  j["tau_interval"] = r.tau_interval ? ordered_json::array({round_significant(r.tau_interval->lower),
                                                            round_significant(r.tau_interval->upper)})
                                     : ordered_json(nullptr);
  j["theorem_bound"] = round_significant(r.theorem_bound);
  j["corollary_bound"] =
      r.corollary_bound ? ordered_json(round_significant(*r.corollary_bound)) : ordered_json(nullptr);
  j["certificates"] = {{"cyclically_reduced", r.certificates.cyclically_reduced},
                       {"letter_eq_syllable", r.certificates.letter_eq_syllable},
                       {"primitive", r.certificates.primitive},
                       {"bound_satisfied", r.certificates.bound_satisfied}};
  return j;
}

std::string report_csv_header() {
  return "word,is_pseudo_anosov,trace_abs,ell_T,ell_C_lower,ell_C_upper,tau_lower,tau_upper,"
         "theorem_bound,corollary_bound,cyclically_reduced,letter_eq_syllable,primitive,"
         "bound_satisfied";
}

std::string to_csv_row(const RatioReport& r, const OutputOptions& opts) {
  auto b = [](bool x) { return x ? "true" : "false"; };
  auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string(); };
  std::ostringstream os;
  os << r.word.to_string() << ',' << b(r.is_pseudo_anosov) << ',' << format_integer(r.trace_abs, opts)
     << ',' << opt(r.ell_T) << ',' << format_double(r.ell_C_interval.lower) << ','
     << format_double(r.ell_C_interval.upper) << ','
     << (r.tau_interval ? format_double(r.tau_interval->lower) : "") << ','
     << (r.tau_interval ? format_double(r.tau_interval->upper) : "") << ','
     << format_double(r.theorem_bound) << ',' << opt(r.corollary_bound) << ','
     << b(r.certificates.cyclically_reduced) << ',' << b(r.certificates.letter_eq_syllable) << ','
     << b(r.certificates.primitive) << ',' << b(r.certificates.bound_satisfied);
  return os.str();
}

void write_text(std::ostream& os, const Config& cfg) {
  os << "surface S_{" << cfg.surface.genus() << "," << cfg.surface.punctures()
     << "}  omega=" << cfg.surface.omega() << "  M=" << cfg.M << "  B=" << cfg.B
     << "  i(alpha,beta)=" << cfg.pair_intersection.value << " ("
     << to_string(cfg.pair_intersection.kind) << ", " << to_string(cfg.source) << ")";
  if (cfg.separating()) {
    os << "  seeds=" << cfg.seeds.genus2 << "," << cfg.seeds.genus3 << "," << cfg.seeds.arcs;
  }
  os << "  n_eff=" << cfg.n_eff().get_str() << '\n';
}

void write_text(std::ostream& os, const RatioReport& r, const OutputOptions& opts) {
  os << "word            " << r.word.to_string() << '\n'
     << "lengths         |w|=" << r.letter_length << " |w|_s=" << r.syllable_length
     << " cyclic |w|_s=" << r.cyclic_syllable_length << '\n'
     << "pseudo-Anosov   " << (r.is_pseudo_anosov ? "yes" : "no");
  if (!r.is_pseudo_anosov) {
    os << " (" << r.non_pa_reason << ")";
  }
  os << "\n|trace|         " << format_integer(r.trace_abs, opts) << '\n';
  if (r.ell_T) {
    os << "ell_T           " << format_double(*r.ell_T) << '\n';
  }
  os << "ell_C           [" << format_double(r.ell_C_interval.lower) << ", "
     << format_double(r.ell_C_interval.upper) << "]\n";
  if (r.tau_interval) {
    os << "tau             [" << format_double(r.tau_interval->lower) << ", "
       << format_double(r.tau_interval->upper) << "]\n";
  }
  os << "theorem bound   " << format_double(r.theorem_bound) << '\n';
  if (r.corollary_bound) {
    os << "corollary bound " << format_double(*r.corollary_bound) << '\n';
  }
  auto b = [](bool x) { return x ? "yes" : "no"; };
  os << "certificates    cyclically_reduced=" << b(r.certificates.cyclically_reduced)
     << " letter_eq_syllable=" << b(r.certificates.letter_eq_syllable)
     << " primitive=" << b(r.certificates.primitive)
     << " bound_satisfied=" << b(r.certificates.bound_satisfied) << '\n';
}

std::string filling_table_csv(const std::vector<FillingRow>& rows) {
  std::ostringstream os;
  os << "g,p,omega,i_min,kind\n";
  for (const auto& row : rows) {
    os << row.g << ',' << row.p << ',' << row.omega << ',' << row.i_min.value << ','
       << to_string(row.i_min.kind) << '\n';
  }
  return os.str();
}

}  // namespace ratioopt
