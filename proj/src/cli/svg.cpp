//------------------------------------------------------------------------------
//
//   Copyright 2026 The IAA Toolkit Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#include "iaa/cli/svg.hpp"

#include "iaa/error.hpp"

#include <array>
#include <cstdio>
#include <sstream>

namespace iaa::cli {

namespace {

constexpr double kWidth       = 720.0;
constexpr double kHeight      = 360.0;
constexpr double kMarginLeft  = 56.0;
constexpr double kMarginRight = 180.0;
constexpr double kMarginTop   = 36.0;
constexpr double kMarginBot   = 44.0;

constexpr std::array<char const *, 10> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v)
{
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  return buffer;
}

std::string escape(std::string const &text)
{
  std::string out;
  for (char c : text)
  {
    switch (c)
    {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    case '"':
      out += "&quot;";
      break;
    default:
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string membership_plot_svg(std::string const &title, std::vector<PlotSeries> const &series)
{
  if (series.empty())
  {
    throw Error(ErrorCode::EmptyInput, "nothing to plot");
  }
  auto const &grid = series.front().set->grid();
  for (auto const &s : series)
  {
    if (!(s.set->grid() == grid))
    {
      throw Error(ErrorCode::GridMismatch, "plot series use different grids");
    }
  }

  double const plot_w = kWidth - kMarginLeft - kMarginRight;
  double const plot_h = kHeight - kMarginTop - kMarginBot;
  auto const   px     = [&](double x) { return kMarginLeft + (x - grid.min()) / (grid.max() - grid.min()) * plot_w; };
  auto const   py     = [&](double mu) { return kMarginTop + (1.0 - mu) * plot_h; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
     << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(kHeight) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << num(kMarginLeft) << "\" y=\"22\" font-family=\"sans-serif\" font-size=\"14\">"
     << escape(title) << "</text>\n";

  // axes, ticks at tenths of the scale and quarters of membership
  os << "<g stroke=\"#444\" stroke-width=\"1\" fill=\"none\">\n";
  os << "<line x1=\"" << num(px(grid.min())) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(grid.max()))
     << "\" y2=\"" << num(py(0)) << "\"/>\n";
  os << "<line x1=\"" << num(px(grid.min())) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(grid.min()))
     << "\" y2=\"" << num(py(1)) << "\"/>\n";
  os << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#222\">\n";
  for (int k = 0; k <= 10; ++k)
  {
    double const x = grid.min() + (grid.max() - grid.min()) * k / 10.0;
    os << "<text x=\"" << num(px(x)) << "\" y=\"" << num(py(0) + 16) << "\" text-anchor=\"middle\">" << num(x)
       << "</text>\n";
  }
  for (int k = 0; k <= 4; ++k)
  {
    double const mu = k / 4.0;
    os << "<text x=\"" << num(kMarginLeft - 6) << "\" y=\"" << num(py(mu) + 4) << "\" text-anchor=\"end\">"
       << num(mu) << "</text>\n";
  }
  os << "</g>\n";

  for (std::size_t s = 0; s < series.size(); ++s)
  {
    auto const &set    = *series[s].set;
    char const *colour = kPalette[s % kPalette.size()];

    // Runs of equal membership become horizontal segments joined at the
    // neighbouring grid point.
    os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    std::size_t i = 0;
    while (i < set.size())
    {
      std::size_t j = i;
      while (j + 1 < set.size() && set[j + 1] == set[i])
      {
        ++j;
      }
      os << num(px(grid.point(i))) << ',' << num(py(set[i])) << ' ';
      if (j != i)
      {
        os << num(px(grid.point(j))) << ',' << num(py(set[i])) << ' ';
      }
      i = j + 1;
    }
    os << "\"/>\n";

    double const ly = kMarginTop + 10.0 + 18.0 * static_cast<double>(s);
    double const lx = kWidth - kMarginRight + 14.0;
    os << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 18) << "\" y2=\"" << num(ly)
       << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << num(lx + 24) << "\" y=\"" << num(ly + 4)
       << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(series[s].label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace iaa::cli
