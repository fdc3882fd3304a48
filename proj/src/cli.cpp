#include "ratioopt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ratioopt/oracles.hpp"
#include "ratioopt/optimizers.hpp"
#include "ratioopt/report_io.hpp"

namespace ratioopt::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  bool short_integers = false;
  std::int64_t genus = 2;
  std::int64_t punctures = 0;
  std::int64_t gmax = -1;
  std::int64_t pmax = 8;
  std::int64_t M = kDefaultM;
  std::string word;
  std::size_t count = 10;
  bool prefix_stable = false;
  int k = 1;
  bool separating = false;
  std::string seeds;
  std::string variant = "paper_literal";
};

SeparatingSeeds parse_seeds(const std::string& text) {
  SeparatingSeeds seeds;
  if (text.empty()) {
    return seeds;
  }
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("--seeds expects three positive integers i2,i3,arcs; got \"" + text + "\"");
    }
  }
  if (values.size() != 3 || std::any_of(values.begin(), values.end(), [](auto v) { return v <= 0; })) {
    throw std::invalid_argument("--seeds expects three positive integers i2,i3,arcs; got \"" + text + "\"");
  }
  return {values[0], values[1], values[2]};
}

TwistVariant parse_variant(const std::string& v) {
  return v == "standard" ? TwistVariant::standard : TwistVariant::paper_literal;
}

OutputOptions output_options(const Options& o) { return {o.short_integers}; }

Config word_config(const Options& o) {
  const SurfaceParams surface(o.genus, o.punctures);
  if (o.separating) {
    return make_separating_config(surface, o.M, parse_seeds(o.seeds));
  }
  return make_filling_config(surface, o.M);
}

ordered_json document(const std::string& command) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

int exit_for(bool all_passed) { return all_passed ? kExitOk : kExitBoundFailed; }

int cmd_table(const Options& o, std::ostream& out) {
  const std::int64_t gmax = o.gmax < 0 ? 5 : o.gmax;
  const auto rows = filling_table(gmax, o.pmax);
  if (o.format == "json") {
    auto j = document("table");
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
      j["rows"].push_back({{"g", r.g}, {"p", r.p}, {"omega", r.omega}, {"i_min", r.i_min.value},
                           {"kind", to_string(r.i_min.kind)}});
    }
    emit_json(out, j);
  } else {
    // text and csv share the CSV layout
    out << filling_table_csv(rows);
  }
  return kExitOk;
}

int emit_reports(const std::string& command, const Config& cfg,
                 const std::vector<RatioReport>& reports, const Options& o, std::ostream& out) {
  const auto opts = output_options(o);
  const bool all_passed = std::all_of(reports.begin(), reports.end(),
                                      [](const RatioReport& r) { return r.bound_check_passed(); });
  if (o.format == "json") {
    auto j = document(command);
    j["config"] = to_json(cfg);
    j["reports"] = ordered_json::array();
    for (const auto& r : reports) {
      j["reports"].push_back(to_json(r, opts));
    }
    j["all_bounds_satisfied"] = all_passed;
    emit_json(out, j);
  } else if (o.format == "csv") {
    out << report_csv_header() << '\n';
    for (const auto& r : reports) {
      out << to_csv_row(r, opts) << '\n';
    }
  } else {
    write_text(out, cfg);
    for (const auto& r : reports) {
      out << '\n';
      write_text(out, r, opts);
    }
  }
  return exit_for(all_passed);
}

int cmd_report(const Options& o, std::ostream& out) {
  const Word w = Word::parse(o.word);
  const Config cfg = word_config(o);
  return emit_reports("report", cfg, {ratio_report(w, cfg)}, o, out);
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Config cfg = word_config(o);
  std::vector<RatioReport> reports;
  reports.reserve(o.count);
  for (auto& entry : enumerate_ratio_optimizers(o.count, cfg, o.prefix_stable)) {
    reports.push_back(std::move(entry.report));
  }
  return emit_reports("enumerate", cfg, reports, o, out);
}

struct FamilyRow {
  std::int64_t genus;
  Config cfg;
  FamilyReport family;
};

int emit_family(const std::string& command, const std::string& constant_name,
                const std::vector<FamilyRow>& rows, const Options& o, std::ostream& out,
                const ordered_json& extra) {
  const auto opts = output_options(o);
  bool all_passed = true;
  double sup = 0;
  for (const auto& row : rows) {
    all_passed = all_passed && row.family.report.bound_check_passed();
    sup = std::max(sup, row.family.implied_constant);
  }
  if (o.format == "json") {
    auto j = document(command);
    for (const auto& [key, value] : extra.items()) {
      j[key] = value;
    }
    j["entries"] = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json e;
      e["genus"] = row.genus;
      e["config"] = to_json(row.cfg);
      e["report"] = to_json(row.family.report, opts);
      e["log_omega"] = round_significant(row.family.log_omega);
      e[constant_name] = round_significant(row.family.implied_constant);
      j["entries"].push_back(std::move(e));
    }
    j[constant_name + "_max"] = round_significant(sup);
    j["all_bounds_satisfied"] = all_passed;
    emit_json(out, j);
  } else if (o.format == "csv") {
    out << "genus," << report_csv_header() << ",log_omega," << constant_name << '\n';
    for (const auto& row : rows) {
      out << row.genus << ',' << to_csv_row(row.family.report, opts) << ','
          << format_double(row.family.log_omega) << ',' << format_double(row.family.implied_constant)
          << '\n';
    }
  } else {
    for (const auto& [key, value] : extra.items()) {
      out << key << ": " << value.dump() << '\n';
    }
    for (const auto& row : rows) {
      out << '\n';
      write_text(out, row.cfg);
      write_text(out, row.family.report, opts);
      out << constant_name << "             " << format_double(row.family.implied_constant)
          << "  (log omega = " << format_double(row.family.log_omega) << ")\n";
    }
    out << '\n' << constant_name << " max over range: " << format_double(sup) << '\n';
  }
  return exit_for(all_passed);
}

std::int64_t range_end(const Options& o) {
  const std::int64_t end = o.gmax < 0 ? o.genus : o.gmax;
  if (end < o.genus) {
    throw std::invalid_argument("--gmax must be at least --genus");
  }
  return end;
}

int cmd_johnson(const Options& o, std::ostream& out) {
  if (o.k < 1) {
    throw std::invalid_argument("--k must be at least 1");
  }
  const auto seeds = parse_seeds(o.seeds);
  const std::int64_t end = range_end(o);
  std::vector<FamilyRow> rows;
  for (std::int64_t g = o.genus; g <= end; ++g) {
    Config cfg = make_separating_config(SurfaceParams(g, o.punctures), o.M, seeds);
    rows.push_back({g, cfg, johnson_report(o.k, cfg)});
  }
  const auto jw = johnson_word(o.k);
  ordered_json extra;
  extra["k"] = o.k;
  extra["nesting"] = jw.nesting;
  extra["word_letter_length"] = jw.word.letter_length();
  return emit_family("johnson", "C_J", rows, o, out, extra);
}

int cmd_pointpush(const Options& o, std::ostream& out) {
  const std::int64_t end = range_end(o);
  const auto variant = parse_variant(o.variant);
  std::vector<FamilyRow> rows;
  ordered_json twist_bounds = ordered_json::array();
  for (std::int64_t g = o.genus; g <= end; ++g) {
    Config cfg = make_pointpush_config(g, o.M);
    rows.push_back({g, cfg, pointpush_report(g, o.M)});
    const std::int64_t s[] = {3, -3};
    const std::int64_t copies[] = {cfg.pointpush_base, cfg.pointpush_base};
    const auto b = twist_intersection_bounds(s, copies, copies, 0, variant);
    twist_bounds.push_back({{"genus", g}, {"lower", b.lower}, {"upper", b.upper}});
  }
  ordered_json extra;
  extra["variant"] = to_string(variant);
  extra["twist_bounds"] = twist_bounds;
  return emit_family("pointpush", "C_P", rows, o, out, extra);
}

int cmd_selftest(const Options& o, std::ostream& out) {
  std::vector<oracle::SuiteResult> suites;
  suites.push_back(oracle::run_tree_distance_suite(4, 2));
  suites.push_back(oracle::run_translation_suite(200, 6, 3, 20240901));
  suites.push_back(oracle::run_conjugacy_suite(4));
  suites.push_back(oracle::run_maximal_cyclic_suite(4));
  suites.push_back(oracle::run_trace_bound_suite(6, {2, 7, 50}));
  bool all_ok = true;
  if (o.format == "json") {
    auto j = document("selftest");
    j["suites"] = ordered_json::array();
    for (const auto& s : suites) {
      j["suites"].push_back({{"name", s.name}, {"passed", s.passed}, {"total", s.total},
                             {"first_failure", s.first_failure}});
      all_ok = all_ok && s.ok();
    }
    j["all_passed"] = all_ok;
    emit_json(out, j);
  } else {
    for (const auto& s : suites) {
      out << (s.ok() ? "PASS " : "FAIL ") << s.name << ": " << s.passed << "/" << s.total;
      if (!s.ok()) {
        out << "  first failure: " << s.first_failure;
      }
      out << '\n';
      all_ok = all_ok && s.ok();
    }
  }
  return exit_for(all_ok);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Ratio optimizers: Teichmueller vs curve graph translation lengths for twist words"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto add_format = [&](CLI::App* sub, const std::string& default_format) {
    o.format = default_format;
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_flag("--short", o.short_integers, "Abbreviate integers longer than 40 digits");
  };
  auto add_surface = [&](CLI::App* sub) {
    sub->add_option("--genus,-g", o.genus, "Genus")->check(CLI::NonNegativeNumber);
    sub->add_option("--punctures,-p", o.punctures, "Punctures")->check(CLI::NonNegativeNumber);
    sub->add_option("--M", o.M, "Bounded geodesic image constant (B = 2M + 7)");
  };

  auto* table = app.add_subcommand("table", "Minimal filling-pair intersection numbers");
  table->add_option("--gmax", o.gmax, "Largest genus")->check(CLI::NonNegativeNumber);
  table->add_option("--pmax", o.pmax, "Largest number of punctures")->check(CLI::NonNegativeNumber);
  table->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));

  auto* report = app.add_subcommand("report", "Ratio report for one word");
  report->add_option("--word,-w", o.word, "Word over {a,A,b,B}, caret exponents allowed")->required();
  add_surface(report);
  report->add_flag("--separating", o.separating, "Use a separating filling pair");
  report->add_option("--seeds", o.seeds, "Separating-pair seeds i2,i3,arcs");

  auto* enumerate = app.add_subcommand("enumerate", "Stream pairwise non-conjugate ratio optimizers");
  enumerate->add_option("--count,-n", o.count, "Number of words")->check(CLI::PositiveNumber);
  enumerate->add_flag("--prefix-stable", o.prefix_stable, "Each word extends the previous one");
  add_surface(enumerate);

  auto* johnson = app.add_subcommand("johnson", "Iterated commutators f_k on a separating pair");
  johnson->add_option("--k,-k", o.k, "Commutator depth")->required();
  add_surface(johnson);
  johnson->add_option("--gmax", o.gmax, "Sweep genus up to this value");
  johnson->add_option("--seeds", o.seeds, "Separating-pair seeds i2,i3,arcs");

  auto* pointpush = app.add_subcommand("pointpush", "Point-pushing optimizer on S_{g,1}");
  pointpush->add_option("--genus,-g", o.genus, "Genus");
  pointpush->add_option("--gmax", o.gmax, "Sweep genus up to this value");
  pointpush->add_option("--M", o.M, "Bounded geodesic image constant (B = 2M + 7)");
  pointpush->add_option("--variant", o.variant, "Twist inequality lower-bound form")
      ->check(CLI::IsMember({"paper_literal", "standard"}));

  auto* selftest = app.add_subcommand("selftest", "Run the brute-force oracle suites");

  // Defaults depend on the subcommand; the last add_format call wins, so set per command after parse.
  for (auto* sub : {report, enumerate, johnson, pointpush, selftest}) {
    add_format(sub, "text");
  }

  std::vector<std::string> argv_storage{"ratioopt"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) {
    argv.push_back(a.data());
  }
  o.format = "";
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (table->parsed()) {
      if (o.format.empty()) {
        o.format = "csv";
      }
      return cmd_table(o, out);
    }
    if (o.format.empty()) {
      o.format = "text";
    }
    if (report->parsed()) {
      return cmd_report(o, out);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(o, out);
    }
    if (johnson->parsed()) {
      return cmd_johnson(o, out);
    }
    if (pointpush->parsed()) {
      return cmd_pointpush(o, out);
    }
    return cmd_selftest(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ratioopt::cli
