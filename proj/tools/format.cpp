// Copyright 2026 The pathspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pathspec::cli {

std::string number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

void emit(std::string& out, const Json& v, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += pretty ? ": " : ":";
        emit(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        emit(out, e, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? number(d) : "null";
      return;
    }
    default:
      out += v.dump();
  }
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw std::runtime_error("bad number in CSV: '" + s + "'");
  return v;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string dump(const Json& value, int indent) {
  std::string out;
  emit(out, value, indent, 0);
  return out;
}

std::string roots_csv(const std::vector<RootRow>& rows) {
  std::string out(kRootsHeader);
  out += '\n';
  for (const RootRow& r : rows) {
    out += std::to_string(r.n) + ',' + r.c + ',' + number(r.re) + ',' + number(r.im) + ',' + number(r.residual);
    out += '\n';
  }
  return out;
}

std::vector<RootRow> parse_roots_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kRootsHeader) throw std::runtime_error("missing roots CSV header");
  std::vector<RootRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 5) throw std::runtime_error("roots CSV row has " + std::to_string(cells.size()) + " cells");
    RootRow r;
    r.n = static_cast<unsigned long>(parse_double(cells[0]));
    r.c = cells[1];
    r.re = parse_double(cells[2]);
    r.im = parse_double(cells[3]);
    r.residual = parse_double(cells[4]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepLine>& rows) {
  std::string out(kSweepHeader);
  out += '\n';
  for (const SweepLine& r : rows) {
    const std::string marker = "error:" + r.error;
    auto cell = [&](bool ok, double v) { return ok ? number(v) : marker; };
    out += std::to_string(r.n);
    for (double v : {r.a_tilde, r.b_tilde, r.rmse, r.eccentricity}) out += ',' + cell(r.fitted, v);
    for (double v : {r.boundary_residual, r.max_re, r.max_im}) out += ',' + cell(r.solved, v);
    out += '\n';
  }
  return out;
}

Json sweep_row_json(const SweepLine& r) {
  auto value = [](bool ok, double v) { return ok ? Json(v) : Json(nullptr); };
  Json j;
  j["n"] = r.n;
  j["c"] = r.c;
  j["a_tilde"] = value(r.fitted, r.a_tilde);
  j["b_tilde"] = value(r.fitted, r.b_tilde);
  j["rmse"] = value(r.fitted, r.rmse);
  j["eccentricity"] = value(r.fitted, r.eccentricity);
  j["boundary_residual"] = value(r.solved, r.boundary_residual);
  j["max_re"] = value(r.solved, r.max_re);
  j["max_im"] = value(r.solved, r.max_im);
  j["precision_bits"] = r.precision_bits;
  j["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
  return j;
}

std::string svg_plot(const std::vector<PlotPoint>& roots, const std::vector<PlotEllipse>& ellipses,
                     std::string_view title, int width) {
  const double w = width;
  const double h = w * kViewIm / kViewRe;
  const double sx = w / (2 * kViewRe), sy = h / (2 * kViewIm);
  const double cx = kViewRe * sx, cy = kViewIm * sy;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(w) + "\" height=\"" + fixed(h) +
         "\" viewBox=\"0 0 " + fixed(w) + ' ' + fixed(h) + "\">\n";
  std::string escaped;
  for (char ch : title) {
    switch (ch) {
      case '&': escaped += "&amp;"; break;
      case '<': escaped += "&lt;"; break;
      case '>': escaped += "&gt;"; break;
      default: escaped += ch;
    }
  }
  out += "  <title>" + escaped + "</title>\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "  <line x1=\"0\" y1=\"" + fixed(cy) + "\" x2=\"" + fixed(w) + "\" y2=\"" + fixed(cy) +
         "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  out += "  <line x1=\"" + fixed(cx) + "\" y1=\"0\" x2=\"" + fixed(cx) + "\" y2=\"" + fixed(h) +
         "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  for (const PlotEllipse& e : ellipses) {
    out += "  <ellipse class=\"" + e.css_class + "\" cx=\"" + fixed(cx) + "\" cy=\"" + fixed(cy) + "\" rx=\"" +
           fixed(e.a * sx) + "\" ry=\"" + fixed(e.b * sy) + "\" fill=\"none\" stroke=\"" + e.stroke +
           "\" stroke-width=\"1.5\"/>\n";
  }
  for (const PlotPoint& p : roots) {
    out += "  <circle class=\"root\" cx=\"" + fixed(cx + p.re * sx) + "\" cy=\"" + fixed(cy - p.im * sy) +
           "\" r=\"3\" fill=\"#1f3b73\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pathspec::cli
