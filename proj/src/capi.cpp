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

#include "pathspec/pathspec.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "fit.hpp"
#include "poly.hpp"
#include "roots.hpp"
#include "seq.hpp"
#include "verify.hpp"

#ifndef PATHSPEC_VERSION_STRING
#define PATHSPEC_VERSION_STRING "0.0.0"
#endif

struct pathspec_poly {
  pathspec::IntPolynomial p;
};

struct pathspec_rootset {
  pathspec::BigInt c;
  pathspec::RootSet set;
};

struct pathspec_report_list {
  std::vector<std::string> names;
  std::vector<std::string> json;
  std::vector<bool> passed;
  std::vector<bool> asserted;
};

struct pathspec_sweep {
  std::vector<pathspec_sweep_row> rows;
};

namespace {

using namespace pathspec;

thread_local std::string g_last_error;

pathspec_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return PATHSPEC_ERR_INVALID_ARGUMENT;
    case ErrorKind::DegreeZero: return PATHSPEC_ERR_DEGREE_ZERO;
    case ErrorKind::PrecisionExhausted: return PATHSPEC_ERR_PRECISION_EXHAUSTED;
    case ErrorKind::DegenerateGeometry: return PATHSPEC_ERR_DEGENERATE_GEOMETRY;
    case ErrorKind::NonIntegral: return PATHSPEC_ERR_NON_INTEGRAL;
  }
  return PATHSPEC_ERR_INTERNAL;
}

pathspec_status set_error(pathspec_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <class F>
pathspec_status guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(PATHSPEC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(PATHSPEC_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(PATHSPEC_ERR_INTERNAL, "unknown failure");
  }
}

pathspec_status write_text(const std::string& text, char* buffer, size_t capacity, size_t* needed) {
  if (needed) *needed = text.size();
  if (buffer == nullptr && capacity != 0) return set_error(PATHSPEC_ERR_INVALID_ARGUMENT, "buffer is null");
  if (capacity <= text.size()) {
    if (capacity > 0) {
      std::memcpy(buffer, text.data(), capacity - 1);
      buffer[capacity - 1] = '\0';
    }
    return set_error(PATHSPEC_ERR_BUFFER_TOO_SMALL,
                     "buffer holds " + std::to_string(capacity) + " bytes, need " + std::to_string(text.size() + 1));
  }
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return PATHSPEC_OK;
}

BigInt parse_integer(const char* text) {
  require(text != nullptr, "integer text is null");
  BigInt v;
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  require(!s.empty() && v.set_str(s, 10) == 0, "not a decimal integer: '" + std::string(text) + "'");
  return v;
}

std::optional<BigInt> optional_integer(const char* text) {
  if (text == nullptr) return std::nullopt;
  return parse_integer(text);
}

SolveConfig to_config(const pathspec_solve_config* cfg) {
  SolveConfig out;
  if (cfg) {
    out.tolerance = cfg->tolerance;
    out.start_bits = cfg->start_bits;
    out.max_bits = cfg->max_bits;
    out.max_iterations = cfg->max_iterations;
  }
  return out;
}

}  // namespace

extern "C" {

const char* pathspec_version(void) { return PATHSPEC_VERSION_STRING; }

const char* pathspec_status_name(pathspec_status status) {
  switch (status) {
    case PATHSPEC_OK: return "Ok";
    case PATHSPEC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case PATHSPEC_ERR_DEGREE_ZERO: return "DegreeZero";
    case PATHSPEC_ERR_PRECISION_EXHAUSTED: return "PrecisionExhausted";
    case PATHSPEC_ERR_DEGENERATE_GEOMETRY: return "DegenerateGeometry";
    case PATHSPEC_ERR_NON_INTEGRAL: return "NonIntegral";
    case PATHSPEC_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case PATHSPEC_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* pathspec_last_error(void) { return g_last_error.c_str(); }

pathspec_status pathspec_fibonacci(unsigned long n, char* buffer, size_t capacity, size_t* needed) {
  return guarded([&] { return write_text(to_decimal(seq::fibonacci(n)), buffer, capacity, needed); });
}

pathspec_status pathspec_pell(unsigned long n, char* buffer, size_t capacity, size_t* needed) {
  return guarded([&] { return write_text(to_decimal(seq::pell(n)), buffer, capacity, needed); });
}

pathspec_status pathspec_binomial(unsigned long n, unsigned long k, char* buffer, size_t capacity, size_t* needed) {
  return guarded([&] { return write_text(to_decimal(seq::binomial(n, k)), buffer, capacity, needed); });
}

pathspec_status pathspec_poly_create(pathspec_poly_family family, unsigned long n, pathspec_poly** out) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    IntPolynomial p;
    switch (family) {
      case PATHSPEC_POLY_PATH: p = poly::path_charpoly(n); break;
      case PATHSPEC_POLY_PATH_RECURSIVE: p = poly::path_charpoly_recursive(n); break;
      case PATHSPEC_POLY_CYCLE: p = poly::cycle_charpoly(n); break;
      case PATHSPEC_POLY_CHEBYSHEV_U: p = poly::chebyshev_u(n); break;
      case PATHSPEC_POLY_CHEBYSHEV_T: p = poly::chebyshev_t(n); break;
      case PATHSPEC_POLY_U_NEG_HALF: p = poly::compose_u_neg_half(n); break;
      default: fail(ErrorKind::InvalidArgument, "unknown polynomial family");
    }
    *out = new pathspec_poly{std::move(p)};
    return PATHSPEC_OK;
  });
}

pathspec_status pathspec_poly_parse(const char* text, pathspec_poly** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new pathspec_poly{IntPolynomial::parse(text)};
    return PATHSPEC_OK;
  });
}

void pathspec_poly_free(pathspec_poly* poly) { delete poly; }

size_t pathspec_poly_degree(const pathspec_poly* poly) { return poly ? poly->p.degree() : 0; }

int pathspec_poly_equal(const pathspec_poly* a, const pathspec_poly* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return a->p == b->p;
}

pathspec_status pathspec_poly_serialize(const pathspec_poly* poly, char* buffer, size_t capacity, size_t* needed) {
  return guarded([&] {
    require(poly != nullptr, "polynomial is null");
    return write_text(poly->p.serialize(), buffer, capacity, needed);
  });
}

pathspec_status pathspec_poly_pretty(const pathspec_poly* poly, const char* var, char* buffer, size_t capacity,
                                     size_t* needed) {
  return guarded([&] {
    require(poly != nullptr, "polynomial is null");
    return write_text(poly->p.pretty(var ? var : "λ"), buffer, capacity, needed);
  });
}

void pathspec_solve_config_init(pathspec_solve_config* cfg) {
  if (cfg == nullptr) return;
  const SolveConfig d;
  cfg->tolerance = d.tolerance;
  cfg->start_bits = d.start_bits;
  cfg->max_bits = d.max_bits;
  cfg->max_iterations = d.max_iterations;
}

pathspec_status pathspec_solve(unsigned long n, const char* c_decimal, const pathspec_solve_config* cfg,
                               pathspec_rootset** out) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    const BigInt c = c_decimal ? parse_integer(c_decimal) : seq::fibonacci(n + 1);
    RootSet set = solve(ShiftedProblem::make(n, c), to_config(cfg));
    *out = new pathspec_rootset{c, std::move(set)};
    return PATHSPEC_OK;
  });
}

void pathspec_rootset_free(pathspec_rootset* roots) { delete roots; }

size_t pathspec_rootset_size(const pathspec_rootset* roots) { return roots ? roots->set.size() : 0; }

pathspec_status pathspec_rootset_get(const pathspec_rootset* roots, size_t index, pathspec_root* out) {
  if (roots == nullptr || out == nullptr) return set_error(PATHSPEC_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= roots->set.size()) return set_error(PATHSPEC_ERR_INVALID_ARGUMENT, "root index out of range");
  const ComplexRoot& r = roots->set.roots[index];
  const Point p = r.point();
  *out = {p.re, p.im, r.residual, r.error_estimate, r.coincident ? 1 : 0};
  return PATHSPEC_OK;
}

double pathspec_rootset_residual_bound(const pathspec_rootset* roots) {
  return roots ? roots->set.residual_bound : 0.0;
}

unsigned pathspec_rootset_precision_bits(const pathspec_rootset* roots) {
  return roots ? roots->set.precision_bits : 0;
}

pathspec_status pathspec_rootset_constant(const pathspec_rootset* roots, char* buffer, size_t capacity,
                                          size_t* needed) {
  return guarded([&] {
    require(roots != nullptr, "root set is null");
    return write_text(to_decimal(roots->c), buffer, capacity, needed);
  });
}

pathspec_status pathspec_real_root_count(unsigned long n, const char* c_decimal, unsigned long* count,
                                         unsigned long* negative_count) {
  return guarded([&] {
    const BigInt c = c_decimal ? parse_integer(c_decimal) : seq::fibonacci(n + 1);
    const RealRootCount r = real_root_count_exact(ShiftedProblem::make(n, c));
    if (count) *count = r.count;
    if (negative_count) *negative_count = r.negative_count;
    return PATHSPEC_OK;
  });
}

pathspec_status pathspec_fit_ellipse(const pathspec_point* points, size_t count, pathspec_ellipse_fit* out) {
  return guarded([&] {
    require(out != nullptr && (points != nullptr || count == 0), "null argument");
    std::vector<Point> pts(count);
    for (size_t i = 0; i < count; ++i) pts[i] = {points[i].re, points[i].im};
    const fit::EllipseFit f = fit::fit_ellipse(pts);
    *out = {f.coeff_a, f.coeff_b, f.a_tilde, f.b_tilde, f.rmse, f.eccentricity};
    return PATHSPEC_OK;
  });
}

pathspec_status pathspec_rmse(const pathspec_point* points, size_t count, double a, double b, double* out) {
  return guarded([&] {
    require(out != nullptr && (points != nullptr || count == 0), "null argument");
    std::vector<Point> pts(count);
    for (size_t i = 0; i < count; ++i) pts[i] = {points[i].re, points[i].im};
    *out = fit::rmse(pts, a, b);
    return PATHSPEC_OK;
  });
}

pathspec_status pathspec_eccentricity(double a, double b, double* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = fit::eccentricity(a, b);
    return PATHSPEC_OK;
  });
}

int pathspec_is_suite(const char* name) { return name != nullptr && verify::is_suite(name); }

pathspec_status pathspec_verify(const char* suite, unsigned long n_min, unsigned long n_max, double tolerance,
                                const char* c_decimal, const pathspec_solve_config* cfg,
                                pathspec_report_list** out) {
  return guarded([&] {
    require(suite != nullptr && out != nullptr, "null argument");
    const std::vector<Report> reports = verify::run_suite(suite, n_min, n_max, tolerance, to_config(cfg), optional_integer(c_decimal));
    auto* list = new pathspec_report_list;
    for (const Report& r : reports) {
      list->names.push_back(r.check_name);
      list->json.push_back(r.to_json().dump());
      list->passed.push_back(r.passed);
      list->asserted.push_back(r.asserted);
    }
    *out = list;
    return PATHSPEC_OK;
  });
}

void pathspec_report_list_free(pathspec_report_list* list) { delete list; }

size_t pathspec_report_list_size(const pathspec_report_list* list) { return list ? list->names.size() : 0; }

int pathspec_report_passed(const pathspec_report_list* list, size_t index) {
  return list && index < list->passed.size() && list->passed[index];
}

int pathspec_report_asserted(const pathspec_report_list* list, size_t index) {
  return list && index < list->asserted.size() && list->asserted[index];
}

const char* pathspec_report_name(const pathspec_report_list* list, size_t index) {
  return list && index < list->names.size() ? list->names[index].c_str() : nullptr;
}

const char* pathspec_report_json(const pathspec_report_list* list, size_t index) {
  return list && index < list->json.size() ? list->json[index].c_str() : nullptr;
}

pathspec_status pathspec_boundary_residual(unsigned long n, const pathspec_solve_config* cfg, double* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = verify::boundary_residual(n, to_config(cfg));
    return PATHSPEC_OK;
  });
}

pathspec_status pathspec_sweep_run(unsigned long n_min, unsigned long n_max, unsigned long step,
                                   const char* c_decimal, const pathspec_solve_config* cfg, pathspec_sweep** out) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    const auto rows = verify::sweep(n_min, n_max, step, optional_integer(c_decimal), to_config(cfg));
    auto* sw = new pathspec_sweep;
    for (const verify::SweepRow& r : rows) {
      pathspec_sweep_row c{};
      c.n = r.n;
      c.a_tilde = r.a_tilde;
      c.b_tilde = r.b_tilde;
      c.rmse = r.rmse;
      c.eccentricity = r.eccentricity;
      c.boundary_residual = r.boundary_residual;
      c.max_re = r.max_re;
      c.max_im = r.max_im;
      c.precision_bits = r.precision_bits;
      c.solved = r.solved;
      c.fitted = r.solved && !r.error;
      c.error = r.error ? status_of(*r.error) : PATHSPEC_OK;
      sw->rows.push_back(c);
    }
    *out = sw;
    return PATHSPEC_OK;
  });
}

void pathspec_sweep_free(pathspec_sweep* sweep) { delete sweep; }

size_t pathspec_sweep_size(const pathspec_sweep* sweep) { return sweep ? sweep->rows.size() : 0; }

pathspec_status pathspec_sweep_get(const pathspec_sweep* sweep, size_t index, pathspec_sweep_row* out) {
  if (sweep == nullptr || out == nullptr) return set_error(PATHSPEC_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= sweep->rows.size()) return set_error(PATHSPEC_ERR_INVALID_ARGUMENT, "row index out of range");
  *out = sweep->rows[index];
  return PATHSPEC_OK;
}

}  // extern "C"
