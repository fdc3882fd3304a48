#pragma once

// Serialization of reports and tables. JSON documents carry "schema": 1;
// big integers are written as decimal strings, floats with 12 significant
// digits.

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "ratioopt/optimizers.hpp"
#include "ratioopt/thurston.hpp"
#include "ratioopt/topology_tables.hpp"

namespace ratioopt {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kSignificantDigits = 12;

struct OutputOptions {
  // Abbreviate integers longer than kShortDigits as "<head>...<tail> (<n> digits)".
  bool short_integers = false;
};

inline constexpr std::size_t kShortDigits = 40;

std::string format_double(double x);
// x rounded to 12 significant digits (what gets written to JSON).
double round_significant(double x);
std::string format_integer(const mpz_class& x, const OutputOptions& opts);

nlohmann::ordered_json matrix_to_json(const IntMatrix2& m, const OutputOptions& opts = {});
// Exact inverse of matrix_to_json (unabbreviated input only).
IntMatrix2 matrix_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const Config& cfg);
nlohmann::ordered_json to_json(const RatioReport& r, const OutputOptions& opts = {});

std::string report_csv_header();
std::string to_csv_row(const RatioReport& r, const OutputOptions& opts = {});

void write_text(std::ostream& os, const RatioReport& r, const OutputOptions& opts = {});
void write_text(std::ostream& os, const Config& cfg);

// Columns g,p,omega,i_min,kind.
std::string filling_table_csv(const std::vector<FillingRow>& rows);

}  // namespace ratioopt
