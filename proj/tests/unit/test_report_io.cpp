#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "ratioopt/report_io.hpp"

using namespace ratioopt;

TEST_CASE("number formatting") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3) == "0.333333333333");
  CHECK(round_significant(1.0 / 3) == 0.333333333333);
  const mpz_class big("123456789012345678901234567890123456789012345");
  CHECK(format_integer(big, {false}) == big.get_str());
  const std::string s = format_integer(big, {true});
  CHECK(s.find("...") != std::string::npos);
  CHECK(s.find("45 digits") != std::string::npos);
  CHECK(format_integer(mpz_class(-42), {true}) == "-42");
}

TEST_CASE("matrix json round trip") {
  const IntMatrix2 m = evaluate(Word::parse("abAB abab"), std::int64_t{97});
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
}

TEST_CASE("report json fields") {
  const Config cfg = make_filling_config(SurfaceParams(3, 0));
  const auto j = to_json(ratio_report(Word::parse("aB"), cfg));
  CHECK(j["word"] == "aB");
  CHECK(j["is_pseudo_anosov"] == true);
  CHECK(j["certificates"]["bound_satisfied"] == true);
  CHECK(j["tau_interval"].size() == 2);
  CHECK(j.contains("corollary_bound"));
  const auto c = to_json(cfg);
  CHECK(c["B"] == 207);
  CHECK(c["n_eff"] == "1035");
}

TEST_CASE("csv rows have header arity") {
  const Config cfg = make_filling_config(SurfaceParams(2, 0));
  auto commas = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
  CHECK(commas(to_csv_row(ratio_report(Word::parse("ab"), cfg))) == commas(report_csv_header()));
  CHECK(commas(to_csv_row(ratio_report(Word::parse("a"), cfg))) == commas(report_csv_header()));
  const auto table = filling_table_csv(filling_table(2, 2));
  CHECK(table.rfind("g,p,omega,i_min,kind\n", 0) == 0);
}

TEST_CASE("text output") {
  std::ostringstream os;
  write_text(os, ratio_report(Word::parse("abAB"), make_filling_config(SurfaceParams(2, 0))));
  CHECK(os.str().find("bound_satisfied=yes") != std::string::npos);
}
