#define BETASPEC_BUILDING
#include "betaspec/betaspec.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>

#include "betaspec/report.hpp"

using namespace betaspec;

struct bs_beta {
  BetaParam value;
};
struct bs_poly {
  ExactPoly value;
};
struct bs_roots {
  RootSet value;
};
struct bs_bundle {
  Bundle value;
};

namespace {

thread_local std::string last_error;

bs_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::config: return BS_ERR_CONFIG;
    case ErrorCode::parse: return BS_ERR_PARSE;
    case ErrorCode::invalid_order: return BS_ERR_INVALID_ORDER;
    case ErrorCode::invalid_parameter: return BS_ERR_INVALID_PARAMETER;
    case ErrorCode::size_limit: return BS_ERR_SIZE_LIMIT;
    case ErrorCode::zero_root: return BS_ERR_ZERO_ROOT;
    case ErrorCode::pole: return BS_ERR_POLE;
    case ErrorCode::convergence_failure: return BS_ERR_CONVERGENCE;
    case ErrorCode::refinement_failure: return BS_ERR_REFINEMENT;
    case ErrorCode::inconsistency: return BS_ERR_INCONSISTENCY;
    case ErrorCode::singularity: return BS_ERR_SINGULARITY;
    case ErrorCode::unknown_test_function: return BS_ERR_UNKNOWN_TEST_FUNCTION;
    case ErrorCode::unknown_target: return BS_ERR_UNKNOWN_TARGET;
  }
  return BS_ERR_INTERNAL;
}

template <class F>
bs_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return BS_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BS_ERR_INTERNAL;
  }
}

bs_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return BS_ERR_NULL_ARGUMENT;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

SolveOptions solve_options(const bs_options* options) {
  SolveOptions o;
  if (options != nullptr) {
    o.target_digits = options->target_digits;
    o.precision = Precision(options->precision_bits);
    o.threads = options->threads;
  }
  if (o.target_digits == 0) fail(ErrorCode::config, "target_digits must be positive");
  return o;
}

Format format_of(bs_format f) { return f == BS_FORMAT_JSON ? Format::json : Format::csv; }

std::vector<std::size_t> orders(const size_t* ns, size_t count) {
  if (count == 0) fail(ErrorCode::invalid_order, "at least one order n is required");
  return {ns, ns + count};
}

}  // namespace

extern "C" {

const char* bs_status_name(bs_status status) {
  switch (status) {
    case BS_OK: return "ok";
    case BS_ERR_CONFIG: return "config";
    case BS_ERR_PARSE: return "parse";
    case BS_ERR_INVALID_ORDER: return "invalid_order";
    case BS_ERR_INVALID_PARAMETER: return "invalid_parameter";
    case BS_ERR_SIZE_LIMIT: return "size_limit";
    case BS_ERR_ZERO_ROOT: return "zero_root";
    case BS_ERR_POLE: return "pole";
    case BS_ERR_CONVERGENCE: return "convergence_failure";
    case BS_ERR_REFINEMENT: return "refinement_failure";
    case BS_ERR_INCONSISTENCY: return "inconsistency";
    case BS_ERR_SINGULARITY: return "singularity";
    case BS_ERR_UNKNOWN_TEST_FUNCTION: return "unknown_test_function";
    case BS_ERR_UNKNOWN_TARGET: return "unknown_target";
    case BS_ERR_NULL_ARGUMENT: return "null_argument";
    case BS_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* bs_last_error(void) { return last_error.c_str(); }

void bs_free_string(char* s) { std::free(s); }

void bs_options_default(bs_options* options) {
  if (options == nullptr) return;
  const SolveOptions d;
  options->target_digits = d.target_digits;
  options->precision_bits = d.precision.bits();
  options->threads = d.threads;
}

bs_status bs_beta_parse(const char* text, bs_beta** out) {
  if (text == nullptr || out == nullptr) return null_argument("bs_beta_parse");
  return guarded([&] { *out = new bs_beta{BetaParam::parse(text)}; });
}

void bs_beta_free(bs_beta* beta) { delete beta; }

bs_status bs_beta_class_of(const bs_beta* beta, bs_beta_class* out) {
  if (beta == nullptr || out == nullptr) return null_argument("bs_beta_class_of");
  switch (beta->value.kind()) {
    case BetaClass::real_gt1: *out = BS_BETA_REAL_GT1; break;
    case BetaClass::real_eq1: *out = BS_BETA_REAL_EQ1; break;
    case BetaClass::complex_nonzero: *out = BS_BETA_COMPLEX_NONZERO; break;
  }
  return BS_OK;
}

bs_status bs_beta_to_string(const bs_beta* beta, char** out) {
  if (beta == nullptr || out == nullptr) return null_argument("bs_beta_to_string");
  return guarded([&] { *out = duplicate(beta->value.to_string()); });
}

bs_status bs_charpoly(const bs_beta* beta, size_t n, bs_poly** out) {
  if (beta == nullptr || out == nullptr) return null_argument("bs_charpoly");
  return guarded([&] { *out = new bs_poly{charpoly_closed_form(beta->value, n)}; });
}

bs_status bs_poly_reverse(const bs_poly* poly, bs_poly** out) {
  if (poly == nullptr || out == nullptr) return null_argument("bs_poly_reverse");
  return guarded([&] { *out = new bs_poly{reverse_poly(poly->value)}; });
}

void bs_poly_free(bs_poly* poly) { delete poly; }

bs_status bs_poly_degree(const bs_poly* poly, size_t* out) {
  if (poly == nullptr || out == nullptr) return null_argument("bs_poly_degree");
  *out = poly->value.degree();
  return BS_OK;
}

bs_status bs_poly_coeff(const bs_poly* poly, size_t k, char** out) {
  if (poly == nullptr || out == nullptr) return null_argument("bs_poly_coeff");
  return guarded([&] {
    if (k > poly->value.degree()) fail(ErrorCode::invalid_parameter, "coefficient index out of range");
    *out = duplicate(to_string(poly->value.coeff(k)));
  });
}

bs_status bs_solve(const bs_poly* poly, const bs_options* options, bs_roots** out) {
  if (poly == nullptr || out == nullptr) return null_argument("bs_solve");
  return guarded([&] { *out = new bs_roots{solve_all(poly->value, solve_options(options))}; });
}

void bs_roots_free(bs_roots* roots) { delete roots; }

bs_status bs_roots_count(const bs_roots* roots, size_t* out) {
  if (roots == nullptr || out == nullptr) return null_argument("bs_roots_count");
  *out = roots->value.size();
  return BS_OK;
}

bs_status bs_roots_precision(const bs_roots* roots, unsigned long* out) {
  if (roots == nullptr || out == nullptr) return null_argument("bs_roots_precision");
  *out = roots->value.precision_bits;
  return BS_OK;
}

bs_status bs_roots_get(const bs_roots* roots, size_t i, double* re, double* im) {
  if (roots == nullptr || re == nullptr || im == nullptr) return null_argument("bs_roots_get");
  return guarded([&] {
    if (i >= roots->value.size()) fail(ErrorCode::invalid_parameter, "root index out of range");
    *re = roots->value.roots[i].re().to_double();
    *im = roots->value.roots[i].im().to_double();
  });
}

bs_status bs_roots_format(const bs_roots* roots, size_t i, unsigned digits, char** re, char** im) {
  if (roots == nullptr || re == nullptr || im == nullptr) return null_argument("bs_roots_format");
  return guarded([&] {
    if (i >= roots->value.size()) fail(ErrorCode::invalid_parameter, "root index out of range");
    std::unique_ptr<char, decltype(&std::free)> r(duplicate(to_decimal(roots->value.roots[i].re(), digits)), &std::free);
    *im = duplicate(to_decimal(roots->value.roots[i].im(), digits));
    *re = r.release();
  });
}

bs_status bs_report_matrix(const bs_beta* beta, size_t n, unsigned digits, int exact, char** out) {
  if (beta == nullptr || out == nullptr) return null_argument("bs_report_matrix");
  return guarded([&] { *out = duplicate(matrix_csv(BetaMatrix(beta->value, n), digits, exact != 0)); });
}

bs_status bs_report_charpoly(const bs_beta* beta, size_t n, unsigned digits, int exact, char** out) {
  if (beta == nullptr || out == nullptr) return null_argument("bs_report_charpoly");
  return guarded([&] {
    *out = duplicate(poly_json(charpoly_closed_form(beta->value, n), beta->value, digits, exact != 0));
  });
}

bs_status bs_report_eigs(const bs_beta* beta, size_t n, const bs_options* options, unsigned digits,
                         bs_format format, char** out) {
  if (beta == nullptr || out == nullptr) return null_argument("bs_report_eigs");
  return guarded([&] {
    const RootSet roots = spectrum(beta->value, n, solve_options(options));
    *out = duplicate(roots_report(roots, beta->value, digits, format_of(format)));
  });
}

bs_status bs_report_cluster(const bs_beta* beta, const size_t* ns, size_t count, double epsilon,
                            const bs_options* options, unsigned digits, bs_format format, char** out) {
  if (beta == nullptr || ns == nullptr || out == nullptr) return null_argument("bs_report_cluster");
  return guarded([&] {
    beta->value.require({BetaClass::real_gt1}, "cluster");
    std::vector<ClusterReport> reports;
    for (const std::size_t n : orders(ns, count)) {
      reports.push_back(cluster_count(spectrum(beta->value, n, solve_options(options)), epsilon, beta->value));
    }
    *out = duplicate(cluster_report(reports, digits, format_of(format)));
  });
}

bs_status bs_report_outliers(const bs_beta* beta, const size_t* ns, size_t count, double epsilon, unsigned digits,
                             bs_format format, char** out) {
  if (beta == nullptr || ns == nullptr || out == nullptr) return null_argument("bs_report_outliers");
  return guarded([&] {
    std::vector<OutlierRecord> records;
    for (const std::size_t n : orders(ns, count)) records.push_back(find_outliers(beta->value, n, digits, epsilon));
    *out = duplicate(outlier_report(records, digits, format_of(format)));
  });
}

bs_status bs_report_singvals(const bs_beta* beta, size_t n, unsigned long precision_bits, unsigned digits,
                             bs_format format, char** out) {
  if (beta == nullptr || out == nullptr) return null_argument("bs_report_singvals");
  return guarded([&] {
    const auto values = singular_values(beta->value, n, Precision(precision_bits));
    *out = duplicate(singular_report(values, beta->value, digits, format_of(format)));
  });
}

bs_status bs_report_weyl(const bs_beta* beta, const size_t* ns, size_t count, const char* test_function,
                         bs_weyl_kind kind, const bs_options* options, unsigned digits, bs_format format, char** out) {
  if (beta == nullptr || ns == nullptr || out == nullptr) return null_argument("bs_report_weyl");
  return guarded([&] {
    const std::vector<TestFunction> functions =
        test_function == nullptr ? all_test_functions() : std::vector<TestFunction>{parse_test_function(test_function)};
    const WeylKind k = kind == BS_WEYL_SINGULAR ? WeylKind::singular : WeylKind::eigen;
    const SolveOptions o = solve_options(options);
    std::vector<WeylReport> reports;
    for (const std::size_t n : orders(ns, count)) {
      if (k == WeylKind::eigen) {
        const RootSet roots = spectrum(beta->value, n, o);
        for (const TestFunction f : functions) reports.push_back(weyl_sum(roots.roots, f, k));
      } else {
        const auto sigma = singular_values(beta->value, n, o.precision);
        for (const TestFunction f : functions) reports.push_back(weyl_sum(sigma, f, k));
      }
    }
    *out = duplicate(weyl_report(reports, digits, format_of(format)));
  });
}

bs_status bs_report_beta1(const size_t* ns, size_t count, unsigned digits, int fit_c2, bs_format format,
                          char** out) {
  if (ns == nullptr || out == nullptr) return null_argument("bs_report_beta1");
  return guarded([&] {
    std::vector<AsymptoticFit> fits;
    // Two guard digits beyond what is printed.
    for (const std::size_t n : orders(ns, count)) fits.push_back(lambda_max_beta1(n, digits + 2));
    std::optional<Real> c2;
    if (fit_c2 != 0) c2 = richardson_c2(fits);
    *out = duplicate(beta1_report(fits, c2 ? &*c2 : nullptr, digits, format_of(format)));
  });
}

bs_status bs_report_power_trace(size_t n, size_t iterations, char** out) {
  if (out == nullptr) return null_argument("bs_report_power_trace");
  return guarded([&] { *out = duplicate(power_trace_json(power_method_trace(n, iterations))); });
}

bs_status bs_reproduce(const char* target, bs_bundle** out) {
  if (target == nullptr || out == nullptr) return null_argument("bs_reproduce");
  return guarded([&] { *out = new bs_bundle{reproduce(target)}; });
}

void bs_bundle_free(bs_bundle* bundle) { delete bundle; }

bs_status bs_bundle_count(const bs_bundle* bundle, size_t* out) {
  if (bundle == nullptr || out == nullptr) return null_argument("bs_bundle_count");
  *out = bundle->value.files.size();
  return BS_OK;
}

bs_status bs_bundle_entry(const bs_bundle* bundle, size_t i, const char** name, const char** content) {
  if (bundle == nullptr || name == nullptr || content == nullptr) return null_argument("bs_bundle_entry");
  if (i >= bundle->value.files.size()) {
    last_error = "bundle index out of range";
    return BS_ERR_INVALID_PARAMETER;
  }
  *name = bundle->value.files[i].first.c_str();
  *content = bundle->value.files[i].second.c_str();
  return BS_OK;
}

}  // extern "C"
