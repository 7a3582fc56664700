#include "momo/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "momo/error.hpp"
#include "momo/harness.hpp"

namespace momo {
namespace {

constexpr std::string_view kStatsHeader = "algo,n,k,runs,mean,q1,q3,ref_curve";

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) return fields;
    start = comma + 1;
  }
}

template <class T>
T parse_field(std::string_view text, std::string_view name, std::size_t line) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("bad " + std::string(name) + " field '" + std::string(text) + "'", line);
  }
  return value;
}

struct Palette {
  std::string_view algo;
  std::string_view color;
};

constexpr Palette kPalette[] = {
    {"gsemo", "#1f77b4"},    {"gsemo-htm", "#d62728"},    {"sd-gsemo", "#2ca02c"},
    {"sd-gsemo-ind", "#9467bd"}, {"semo", "#8c564b"},
};

std::string color_for(std::string_view algo, std::size_t fallback) {
  for (const auto& p : kPalette) {
    if (p.algo == algo) return std::string(p.color);
  }
  static constexpr std::string_view extra[] = {"#ff7f0e", "#17becf", "#bcbd22", "#7f7f7f"};
  return std::string(extra[fallback % std::size(extra)]);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << v;
  return os.str();
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<StatsCsvRow> parse_stats_csv(std::string_view text) {
  std::vector<StatsCsvRow> rows;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kStatsHeader) throw ParseError("expected header '" + std::string(kStatsHeader) + "'", line_no);
      header_seen = true;
      continue;
    }
    const auto f = split_fields(line);
    if (f.size() != 8) {
      throw ParseError("expected 8 fields, found " + std::to_string(f.size()), line_no);
    }
    StatsCsvRow row;
    if (f[0].empty()) throw ParseError("empty algo field", line_no);
    row.algo = std::string(f[0]);
    row.n = parse_field<std::size_t>(f[1], "n", line_no);
    if (!f[2].empty()) row.k = parse_field<std::size_t>(f[2], "k", line_no);
    row.runs = parse_field<std::size_t>(f[3], "runs", line_no);
    row.mean = parse_field<double>(f[4], "mean", line_no);
    row.q1 = parse_field<double>(f[5], "q1", line_no);
    row.q3 = parse_field<double>(f[6], "q3", line_no);
    if (!f[7].empty()) row.ref_curve = parse_field<double>(f[7], "ref_curve", line_no);
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw ParseError("missing header", std::max<std::size_t>(line_no, 1));
  if (rows.empty()) throw ParseError("no data rows", line_no);
  return rows;
}

std::string render_svg(const std::vector<StatsCsvRow>& rows, double beta) {
  if (rows.empty()) throw UsageError("render_svg needs at least one row");
  constexpr double width = 820, height = 560;
  constexpr double left = 90, right = 200, top = 40, bottom = 70;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  // Series in first-appearance order.
  std::vector<std::string> algos;
  std::map<std::string, std::vector<const StatsCsvRow*>> series;
  for (const auto& r : rows) {
    if (!series.contains(r.algo)) algos.push_back(r.algo);
    series[r.algo].push_back(&r);
  }
  for (auto& [_, pts] : series) {
    std::sort(pts.begin(), pts.end(), [](const auto* a, const auto* b) { return a->n < b->n; });
  }

  struct Curve {
    std::string label;
    std::string css;
    std::vector<std::pair<double, double>> points;
  };
  std::vector<Curve> curves;
  std::set<std::pair<std::size_t, std::size_t>> nk;
  for (const auto& r : rows) {
    if (r.k) nk.insert({r.n, *r.k});
  }
  if (!nk.empty()) {
    curves = {{"1.5e(n-2k)n^k", "ref-gsemo", {}},
              {"(n-2k)(en)^k/k^(k-1)", "ref-htm", {}},
              {"1.5(n-2k)(en)^k/k^k", "ref-sd", {}}};
    for (const auto& [n, k] : nk) {
      if (k > n / 2) continue;
      const ReferenceCurves c = reference_curves(n, k, beta);
      const double values[] = {c.gsemo, c.htm, c.sd};
      for (std::size_t i = 0; i < 3; ++i) {
        if (values[i] > 0) curves[i].points.push_back({static_cast<double>(n), values[i]});
      }
    }
  }

  double x_min = static_cast<double>(rows.front().n), x_max = x_min;
  double y_min = std::numeric_limits<double>::infinity(), y_max = 0;
  const auto take_y = [&](double v) {
    if (v > 0) {
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  };
  for (const auto& r : rows) {
    x_min = std::min(x_min, static_cast<double>(r.n));
    x_max = std::max(x_max, static_cast<double>(r.n));
    take_y(r.q1);
    take_y(r.q3);
    take_y(r.mean);
  }
  for (const auto& c : curves) {
    for (const auto& [_, y] : c.points) take_y(y);
  }
  if (y_max <= 0) {
    y_min = 1;
    y_max = 10;
  }
  if (x_max == x_min) {
    x_min -= 1;
    x_max += 1;
  }
  const double dec_lo = std::floor(std::log10(y_min));
  double dec_hi = std::ceil(std::log10(y_max));
  if (dec_hi <= dec_lo) dec_hi = dec_lo + 1;

  const auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
  const auto sy = [&](double y) {
    const double ly = std::log10(std::max(y, std::pow(10.0, dec_lo)));
    return top + plot_h - (ly - dec_lo) / (dec_hi - dec_lo) * plot_h;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<desc>\n" << kStatsHeader << '\n';
  for (const auto& r : rows) {
    svg << xml_escape(r.algo) << ',' << r.n << ',' << (r.k ? std::to_string(*r.k) : "") << ',' << r.runs << ','
        << format_double(r.mean) << ',' << format_double(r.q1) << ',' << format_double(r.q3) << ','
        << (r.ref_curve ? format_double(*r.ref_curve) : "") << '\n';
  }
  svg << "</desc>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  // Axes, decade grid and ticks.
  svg << "<g class=\"axes\" stroke=\"#333\" fill=\"none\">\n"
      << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
      << "\"/>\n</g>\n";
  for (double d = dec_lo; d <= dec_hi; d += 1) {
    const double y = sy(std::pow(10.0, d));
    svg << "<line class=\"grid\" x1=\"" << left << "\" x2=\"" << left + plot_w << "\" y1=\"" << fmt(y)
        << "\" y2=\"" << fmt(y) << "\" stroke=\"#ddd\"/>\n"
        << "<text x=\"" << left - 8 << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">1e" << d
        << "</text>\n";
  }
  std::set<std::size_t> xs;
  for (const auto& r : rows) xs.insert(r.n);
  for (const std::size_t n : xs) {
    const double x = sx(static_cast<double>(n));
    svg << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(top + plot_h + 18) << "\" text-anchor=\"middle\">" << n
        << "</text>\n";
  }
  svg << "<text x=\"" << fmt(left + plot_w / 2) << "\" y=\"" << height - 20
      << "\" text-anchor=\"middle\">n</text>\n"
      << "<text x=\"20\" y=\"" << fmt(top + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << fmt(top + plot_h / 2) << ")\">mean function evaluations</text>\n";

  // Legend entries are appended as series are drawn.
  std::ostringstream legend;
  double legend_y = top + 10;
  const double legend_x = left + plot_w + 20;

  for (const auto& c : curves) {
    if (c.points.empty()) continue;
    svg << "<polyline class=\"reference " << c.css << "\" fill=\"none\" stroke=\"#555\" stroke-dasharray=\"6 4\" points=\"";
    for (const auto& [x, y] : c.points) svg << fmt(sx(x)) << ',' << fmt(sy(y)) << ' ';
    svg << "\"/>\n";
    legend << "<line x1=\"" << legend_x << "\" x2=\"" << legend_x + 24 << "\" y1=\"" << legend_y << "\" y2=\""
           << legend_y << "\" stroke=\"#555\" stroke-dasharray=\"6 4\"/><text x=\"" << legend_x + 30 << "\" y=\""
           << legend_y + 4 << "\">" << xml_escape(c.label) << "</text>\n";
    legend_y += 18;
  }

  for (std::size_t i = 0; i < algos.size(); ++i) {
    const auto& pts = series[algos[i]];
    const std::string color = color_for(algos[i], i);
    svg << "<g class=\"series\" data-algo=\"" << xml_escape(algos[i]) << "\" stroke=\"" << color
        << "\" fill=\"" << color << "\">\n";
    svg << "<polyline fill=\"none\" stroke-width=\"1.5\" points=\"";
    for (const auto* p : pts) svg << fmt(sx(static_cast<double>(p->n))) << ',' << fmt(sy(p->mean)) << ' ';
    svg << "\"/>\n";
    for (const auto* p : pts) {
      const double x = sx(static_cast<double>(p->n));
      svg << "<line class=\"whisker\" x1=\"" << fmt(x) << "\" x2=\"" << fmt(x) << "\" y1=\"" << fmt(sy(p->q1))
          << "\" y2=\"" << fmt(sy(p->q3)) << "\"/>\n"
          << "<circle class=\"point\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(sy(p->mean)) << "\" r=\"3\"/>\n";
    }
    svg << "</g>\n";
    legend << "<line x1=\"" << legend_x << "\" x2=\"" << legend_x + 24 << "\" y1=\"" << legend_y << "\" y2=\""
           << legend_y << "\" stroke=\"" << color << "\" stroke-width=\"2\"/><text x=\"" << legend_x + 30
           << "\" y=\"" << legend_y + 4 << "\">" << xml_escape(algos[i]) << "</text>\n";
    legend_y += 18;
  }
  svg << "<g class=\"legend\">\n" << legend.str() << "</g>\n</svg>\n";
  return svg.str();
}

void emit_plot(const std::filesystem::path& stats_csv, const std::filesystem::path& output, double beta) {
  std::ifstream in(stats_csv, std::ios::binary);
  if (!in) throw IoError("cannot open '" + stats_csv.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const auto rows = parse_stats_csv(buffer.str());
  write_text_file(output, render_svg(rows, beta));
}

}  // namespace momo
