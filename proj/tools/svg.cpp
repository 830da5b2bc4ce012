#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "ltiest/error.hpp"

namespace ltiest::io {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;

constexpr const char* kPalette[] = {"#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#17becf", "#8c564b", "#e377c2", "#bcbd22"};
constexpr const char* kDotColour = "#d62728";

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string pi_label(long quarters) {
  if (quarters == 0) return "0";
  long num = quarters;
  long den = 4;
  while (num % 2 == 0 && den > 1) {
    num /= 2;
    den /= 2;
  }
  std::string s = num < 0 ? "-" : "";
  const long mag = std::abs(num);
  if (mag != 1) s += std::to_string(mag);
  s += "π";
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

struct Frame {
  double k_min, k_max, e_min, e_max;

  double x(double k) const { return kLeft + (k - k_min) / (k_max - k_min) * (kWidth - kLeft - kRight); }
  double y(double e) const {
    return kHeight - kBottom - (e - e_min) / (e_max - e_min) * (kHeight - kTop - kBottom);
  }
};

double nice_step(double span) {
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double f : {1.0, 2.0, 5.0, 10.0})
    if (f * mag >= raw) return f * mag;
  return 10.0 * mag;
}

void axes(std::ostream& out, const Frame& f) {
  const double x0 = kLeft, x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom, y1 = kTop;
  out << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(y1) << "\" width=\"" << fmt(x1 - x0)
      << "\" height=\"" << fmt(y0 - y1) << "\" fill=\"none\" stroke=\"black\"/>\n";

  const double quarter = std::numbers::pi / 4.0;
  long step = 1;
  while ((f.k_max - f.k_min) / (quarter * static_cast<double>(step)) > 16.0) step *= 2;
  const long first = static_cast<long>(std::ceil(f.k_min / quarter - 1e-9));
  const long last = static_cast<long>(std::floor(f.k_max / quarter + 1e-9));
  for (long q = first; q <= last; ++q) {
    if (q % step != 0) continue;
    const double x = f.x(static_cast<double>(q) * quarter);
    out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x)
        << "\" y2=\"" << fmt(y0 + 6) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y0 + 22)
        << "\" text-anchor=\"middle\" font-size=\"13\">" << pi_label(q) << "</text>\n";
  }

  const double estep = nice_step(f.e_max - f.e_min);
  for (double e = std::ceil(f.e_min / estep) * estep; e <= f.e_max + 1e-12; e += estep) {
    const double y = f.y(e);
    const double shown = std::abs(e) < 1e-12 ? 0.0 : e;
    out << "<line x1=\"" << fmt(x0 - 6) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x0)
        << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(x0 - 10) << "\" y=\"" << fmt(y + 4)
        << "\" text-anchor=\"end\" font-size=\"13\">" << fmt(shown) << "</text>\n";
  }
  out << "<text x=\"" << fmt((x0 + x1) / 2) << "\" y=\"" << fmt(kHeight - 15)
      << "\" text-anchor=\"middle\" font-size=\"14\">k (1/a)</text>\n";
  out << "<text x=\"20\" y=\"" << fmt((y0 + y1) / 2) << "\" text-anchor=\"middle\" font-size=\"14\""
      << " transform=\"rotate(-90 20 " << fmt((y0 + y1) / 2) << ")\">E (eV)</text>\n";
}

}  // namespace

void write_band_svg(std::ostream& out, std::span<const BandStructure> bands) {
  if (bands.empty()) throw InvalidArgument("nothing to plot");
  Frame f{bands.front().grid().k_min(), bands.front().grid().k_max(), 0.0, 0.0};
  f.e_min = bands.front().params().band_min();
  f.e_max = bands.front().params().band_max();
  for (const auto& bs : bands) {
    f.k_min = std::min(f.k_min, bs.grid().k_min());
    f.k_max = std::max(f.k_max, bs.grid().k_max());
    f.e_min = std::min(f.e_min, bs.params().band_min());
    f.e_max = std::max(f.e_max, bs.params().band_max());
  }
  const double pad = std::max(0.05 * (f.e_max - f.e_min), 0.05);
  f.e_min -= pad;
  f.e_max += pad;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  axes(out, f);

  for (const auto& bs : bands) {
    // Label -> (k index, level) series, ordered by first appearance.
    std::vector<std::string> order;
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    for (std::size_t n = 0; n < bs.grid().count(); ++n) {
      for (const auto& level : bs.at(n)) {
        const std::string key = level.label.str();
        auto [it, inserted] = series.try_emplace(key);
        if (inserted) order.push_back(key);
        it->second.emplace_back(bs.grid()[n], level.energy);
      }
    }
    const bool dots = bs.engine() == Engine::kTb;
    const char* dash = bs.engine() == Engine::kFd ? " stroke-dasharray=\"6 3\"" : "";
    out << "<g class=\"" << to_string(bs.engine()) << "\">\n";
    for (std::size_t s = 0; s < order.size(); ++s) {
      const auto& pts = series[order[s]];
      if (dots) {
        out << "<g class=\"series\" data-branch=\"" << order[s] << "\" fill=\"none\" stroke=\""
            << kDotColour << "\">\n";
        for (const auto& [k, e] : pts)
          out << "<circle cx=\"" << fmt(f.x(k)) << "\" cy=\"" << fmt(f.y(e)) << "\" r=\"2.5\"/>\n";
        out << "</g>\n";
      } else {
        out << "<polyline class=\"series\" data-branch=\"" << order[s]
            << "\" fill=\"none\" stroke-width=\"2\" stroke=\""
            << kPalette[s % std::size(kPalette)] << '"' << dash << " points=\"";
        for (std::size_t p = 0; p < pts.size(); ++p)
          out << (p ? " " : "") << fmt(f.x(pts[p].first)) << ',' << fmt(f.y(pts[p].second));
        out << "\"/>\n";
      }
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
}

}  // namespace ltiest::io
