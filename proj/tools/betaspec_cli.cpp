#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "betaspec/betaspec.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// A failure that ends the run with a machine-readable line on stderr.
struct Failure {
  int exit_code;
  std::string code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& message) { throw Failure{kExitUsage, "usage", message}; }

bool is_usage_status(bs_status s) {
  switch (s) {
    case BS_ERR_CONFIG:
    case BS_ERR_PARSE:
    case BS_ERR_INVALID_ORDER:
    case BS_ERR_INVALID_PARAMETER:
    case BS_ERR_SIZE_LIMIT:
    case BS_ERR_UNKNOWN_TEST_FUNCTION:
    case BS_ERR_UNKNOWN_TARGET:
      return true;
    default:
      return false;
  }
}

void check(bs_status s) {
  if (s == BS_OK) return;
  throw Failure{is_usage_status(s) ? kExitUsage : kExitFailure, bs_status_name(s), bs_last_error()};
}

struct BetaDeleter {
  void operator()(bs_beta* b) const { bs_beta_free(b); }
};
struct StringDeleter {
  void operator()(char* s) const { bs_free_string(s); }
};
struct BundleDeleter {
  void operator()(bs_bundle* b) const { bs_bundle_free(b); }
};
using BetaHandle = std::unique_ptr<bs_beta, BetaDeleter>;
using Text = std::unique_ptr<char, StringDeleter>;

struct Config {
  std::string beta;
  std::vector<std::size_t> n;
  double eps = 0.05;
  unsigned long prec = 256;
  unsigned digits = 30;
  std::string format;
  std::string out;
  bool exact = false;
  std::string fn;
  std::string kind = "eigen";
  std::size_t trace = 0;
  bool fit_c2 = false;
  std::string target;
};

BetaHandle parse_beta(const Config& cfg) {
  if (cfg.beta.empty()) usage_error("--beta is required");
  bs_beta* raw = nullptr;
  const bs_status s = bs_beta_parse(cfg.beta.c_str(), &raw);
  if (s != BS_OK) throw Failure{kExitUsage, bs_status_name(s), bs_last_error()};
  return BetaHandle(raw);
}

void require_class(const bs_beta* beta, bs_beta_class wanted, const std::string& command, const std::string& what) {
  bs_beta_class c{};
  check(bs_beta_class_of(beta, &c));
  if (c != wanted) usage_error(command + " requires " + what);
}

std::size_t single_n(const Config& cfg, const std::string& command) {
  if (cfg.n.size() != 1) usage_error(command + " takes exactly one value for --n");
  return cfg.n.front();
}

const std::vector<std::size_t>& n_list(const Config& cfg) {
  if (cfg.n.empty()) usage_error("--n is required");
  return cfg.n;
}

bs_format format_or(const Config& cfg, bs_format fallback) {
  if (cfg.format.empty()) return fallback;
  return cfg.format == "json" ? BS_FORMAT_JSON : BS_FORMAT_CSV;
}

bs_options options_of(const Config& cfg) {
  bs_options o;
  bs_options_default(&o);
  o.target_digits = cfg.digits;
  o.precision_bits = cfg.prec;
  return o;
}

void emit(const Config& cfg, const char* text) {
  if (cfg.out.empty()) {
    std::fputs(text, stdout);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Failure{kExitFailure, "io", "cannot open " + cfg.out + " for writing"};
  file << text;
  if (!file) throw Failure{kExitFailure, "io", "failed writing " + cfg.out};
}

void emit(const Config& cfg, const Text& text) { emit(cfg, text.get()); }

Text take(char* raw) { return Text(raw); }

// ---------------------------------------------------------------- commands

void cmd_matrix(const Config& cfg) {
  if (format_or(cfg, BS_FORMAT_CSV) != BS_FORMAT_CSV) usage_error("matrix writes CSV only");
  const auto beta = parse_beta(cfg);
  char* out = nullptr;
  check(bs_report_matrix(beta.get(), single_n(cfg, "matrix"), cfg.digits, cfg.exact, &out));
  emit(cfg, take(out));
}

void cmd_charpoly(const Config& cfg) {
  if (format_or(cfg, BS_FORMAT_JSON) != BS_FORMAT_JSON) usage_error("charpoly writes JSON only");
  const auto beta = parse_beta(cfg);
  char* out = nullptr;
  check(bs_report_charpoly(beta.get(), single_n(cfg, "charpoly"), cfg.digits, cfg.exact, &out));
  emit(cfg, take(out));
}

void cmd_eigs(const Config& cfg) {
  const auto beta = parse_beta(cfg);
  const bs_options o = options_of(cfg);
  char* out = nullptr;
  check(bs_report_eigs(beta.get(), single_n(cfg, "eigs"), &o, cfg.digits, format_or(cfg, BS_FORMAT_JSON), &out));
  emit(cfg, take(out));
}

void cmd_cluster(const Config& cfg) {
  const auto beta = parse_beta(cfg);
  require_class(beta.get(), BS_BETA_REAL_GT1, "cluster", "a real beta > 1");
  const auto& ns = n_list(cfg);
  bs_options o = options_of(cfg);
  char* out = nullptr;
  check(bs_report_cluster(beta.get(), ns.data(), ns.size(), cfg.eps, &o, cfg.digits, format_or(cfg, BS_FORMAT_CSV),
                          &out));
  emit(cfg, take(out));
}

void cmd_outliers(const Config& cfg) {
  const auto beta = parse_beta(cfg);
  require_class(beta.get(), BS_BETA_REAL_GT1, "outliers", "a real beta in (1, 2)");
  const auto& ns = n_list(cfg);
  char* out = nullptr;
  check(bs_report_outliers(beta.get(), ns.data(), ns.size(), cfg.eps, cfg.digits, format_or(cfg, BS_FORMAT_CSV),
                           &out));
  emit(cfg, take(out));
}

void cmd_singvals(const Config& cfg) {
  const auto beta = parse_beta(cfg);
  char* out = nullptr;
  check(bs_report_singvals(beta.get(), single_n(cfg, "singvals"), cfg.prec, cfg.digits,
                           format_or(cfg, BS_FORMAT_CSV), &out));
  emit(cfg, take(out));
}

void cmd_weyl(const Config& cfg) {
  const auto beta = parse_beta(cfg);
  const auto& ns = n_list(cfg);
  const bs_weyl_kind kind = cfg.kind == "singular" ? BS_WEYL_SINGULAR : BS_WEYL_EIGEN;
  const bs_options o = options_of(cfg);
  char* out = nullptr;
  check(bs_report_weyl(beta.get(), ns.data(), ns.size(), cfg.fn.empty() ? nullptr : cfg.fn.c_str(), kind, &o,
                       cfg.digits, format_or(cfg, BS_FORMAT_CSV), &out));
  emit(cfg, take(out));
}

void cmd_beta1(const Config& cfg) {
  if (!cfg.beta.empty()) {
    const auto beta = parse_beta(cfg);
    require_class(beta.get(), BS_BETA_REAL_EQ1, "beta1", "beta = 1 (or no --beta)");
  }
  char* out = nullptr;
  if (cfg.trace > 0) {
    check(bs_report_power_trace(single_n(cfg, "beta1 --trace"), cfg.trace, &out));
  } else {
    const auto& ns = n_list(cfg);
    check(bs_report_beta1(ns.data(), ns.size(), cfg.digits, cfg.fit_c2, format_or(cfg, BS_FORMAT_CSV), &out));
  }
  emit(cfg, take(out));
}

void cmd_reproduce(const Config& cfg) {
  bs_bundle* raw = nullptr;
  check(bs_reproduce(cfg.target.c_str(), &raw));
  const std::unique_ptr<bs_bundle, BundleDeleter> bundle(raw);
  const std::filesystem::path dir = cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Failure{kExitFailure, "io", "cannot create directory " + dir.string() + ": " + ec.message()};
  std::size_t count = 0;
  check(bs_bundle_count(bundle.get(), &count));
  for (std::size_t i = 0; i < count; ++i) {
    const char* name = nullptr;
    const char* content = nullptr;
    check(bs_bundle_entry(bundle.get(), i, &name, &content));
    const auto path = dir / name;
    std::ofstream file(path, std::ios::binary);
    file << content;
    if (!file) throw Failure{kExitFailure, "io", "failed writing " + path.string()};
    std::cout << path.string() << "\n";
  }
}

void report_failure(const Failure& f) {
  const nlohmann::ordered_json line = {{"error", f.code}, {"exit_code", f.exit_code}, {"message", f.message}};
  std::cerr << line.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of beta-matrices: B_n = T_n + (v - e_1) e^T with v_j = beta^-j, T_n the lower shift.\n"
               "Exit codes: 0 success, 1 computational failure, 2 usage error. Errors are written to stderr\n"
               "as one JSON line {\"error\", \"exit_code\", \"message\"}.",
               "betaspec"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  Config cfg;

  const auto add_beta = [&](CLI::App* c) {
    c->add_option("--beta", cfg.beta, "beta as p/q, decimal, or complex a+bi");
  };
  const auto add_n = [&](CLI::App* c, const char* help) {
    c->add_option("--n", cfg.n, help)->delimiter(',')->required();
  };
  const auto add_digits = [&](CLI::App* c, const char* help) {
    c->add_option("--digits", cfg.digits, help)->check(CLI::Range(1U, 100000U))->capture_default_str();
  };
  const auto add_prec = [&](CLI::App* c) {
    c->add_option("--prec", cfg.prec, "working precision in bits (>= 64)")
        ->check(CLI::Range(64UL, 1UL << 24))
        ->capture_default_str();
  };
  const auto add_format = [&](CLI::App* c, const char* help) {
    c->add_option("--format", cfg.format, help)->check(CLI::IsMember({"csv", "json"}));
  };
  const auto add_out = [&](CLI::App* c) { c->add_option("--out", cfg.out, "output file (default: stdout)"); };
  const auto add_eps = [&](CLI::App* c) {
    c->add_option("--eps", cfg.eps, "annulus half-width epsilon")->check(CLI::PositiveNumber)->capture_default_str();
  };

  auto* matrix = app.add_subcommand("matrix", "dense B_n as CSV, one row per line");
  add_beta(matrix);
  add_n(matrix, "order n");
  add_digits(matrix, "significant digits of decimal entries");
  matrix->add_flag("--exact", cfg.exact, "print exact p/q entries");
  add_format(matrix, "csv only");
  add_out(matrix);

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial as JSON {degree, coeffs, beta, exact}");
  add_beta(charpoly);
  add_n(charpoly, "order n");
  add_digits(charpoly, "significant digits of decimal coefficients");
  charpoly->add_flag("--exact", cfg.exact, "print exact p/q coefficients");
  add_format(charpoly, "json only");
  add_out(charpoly);

  auto* eigs = app.add_subcommand(
      "eigs", "all eigenvalues with residuals; JSON {beta, n, precision_bits, roots[{re, im, residual}]} or CSV re,im,residual");
  add_beta(eigs);
  add_n(eigs, "order n");
  add_digits(eigs, "digits two precision levels must agree on, and digits printed");
  add_prec(eigs);
  add_format(eigs, "json (default) or csv");
  add_out(eigs);

  auto* cluster = app.add_subcommand("cluster", "eigenvalues outside ||z|-1| <= eps; CSV n,beta,epsilon,outside_count");
  add_beta(cluster);
  add_n(cluster, "orders n (comma separated)");
  add_eps(cluster);
  add_digits(cluster, "solver digits");
  add_prec(cluster);
  add_format(cluster, "csv (default) or json");
  add_out(cluster);

  auto* outliers = app.add_subcommand(
      "outliers", "the two real outliers for beta in (1,2); CSV n,large,small,err_large,err_small");
  add_beta(outliers);
  add_n(outliers, "orders n (comma separated)");
  add_eps(outliers);
  add_digits(outliers, "digits of the refined outliers");
  add_format(outliers, "csv (default) or json");
  add_out(outliers);

  auto* singvals = app.add_subcommand("singvals", "singular values, nonincreasing; CSV index,sigma");
  add_beta(singvals);
  add_n(singvals, "order n");
  add_digits(singvals, "digits printed");
  add_prec(singvals);
  add_format(singvals, "csv (default) or json");
  add_out(singvals);

  auto* weyl = app.add_subcommand("weyl", "Weyl sums against the unit-circle mean (eigen) or F(1) (singular); CSV "
                                          "n,F_id,empirical,reference,gap");
  add_beta(weyl);
  add_n(weyl, "orders n (comma separated)");
  weyl->add_option("--fn", cfg.fn, "test function (default: all)")
      ->check(CLI::IsMember({"radial_bump", "angular_window", "re_moment", "im_moment", "unit_ball"}));
  weyl->add_option("--kind", cfg.kind, "eigen or singular")
      ->check(CLI::IsMember({"eigen", "singular"}))
      ->capture_default_str();
  add_digits(weyl, "digits printed and solver digits");
  add_prec(weyl);
  add_format(weyl, "csv (default) or json");
  add_out(weyl);

  auto* beta1 = app.add_subcommand(
      "beta1", "beta = 1: dominant eigenvalue by the power method; CSV n,c0_est,c1_est (JSON adds lambda_M and c2)");
  add_beta(beta1);
  add_n(beta1, "orders n (comma separated)");
  add_digits(beta1, "digits printed");
  beta1->add_option("--trace", cfg.trace, "dump K exact power iterates for one n as JSON instead");
  beta1->add_flag("--fit-c2", cfg.fit_c2, "add a Richardson estimate of c2 to the JSON output");
  add_format(beta1, "csv (default) or json");
  add_out(beta1);

  auto* reproduce = app.add_subcommand("reproduce", "write the data behind a figure or table into --out DIR");
  reproduce->add_option("target", cfg.target, "fig1, fig2, fig3, outlier-digits, table1 or table2")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "outlier-digits", "table1", "table2"}));
  reproduce->add_option("--out", cfg.out, "output directory (default: .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_failure({kExitUsage, "usage", e.what()});
    return kExitUsage;
  }

  try {
    if (*matrix) cmd_matrix(cfg);
    if (*charpoly) cmd_charpoly(cfg);
    if (*eigs) cmd_eigs(cfg);
    if (*cluster) cmd_cluster(cfg);
    if (*outliers) cmd_outliers(cfg);
    if (*singvals) cmd_singvals(cfg);
    if (*weyl) cmd_weyl(cfg);
    if (*beta1) cmd_beta1(cfg);
    if (*reproduce) cmd_reproduce(cfg);
  } catch (const Failure& f) {
    report_failure(f);
    return f.exit_code;
  }
  return kExitOk;
}
