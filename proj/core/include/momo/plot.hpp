#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace momo {

// One data line of a stats CSV (header algo,n,k,runs,mean,q1,q3,ref_curve).
struct StatsCsvRow {
  std::string algo;
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::size_t runs = 0;
  double mean = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  std::optional<double> ref_curve;
};

// Throws ParseError (with 1-based line number) on malformed content or an
// empty data section.
std::vector<StatsCsvRow> parse_stats_csv(std::string_view text);

// Log-scale SVG chart: mean evaluations against n per algorithm with q1-q3
// whiskers, plus the three reference curves whenever the rows carry k.
// The source rows are embedded in a <desc> element.
std::string render_svg(const std::vector<StatsCsvRow>& rows, double beta = 1.5);

// Reads stats_csv, renders and writes output. Nothing is written when the
// input fails to parse. Throws IoError / ParseError.
void emit_plot(const std::filesystem::path& stats_csv, const std::filesystem::path& output,
               double beta = 1.5);

}  // namespace momo
