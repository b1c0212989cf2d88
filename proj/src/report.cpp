#include "betaspec/report.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace betaspec {

using Json = nlohmann::ordered_json;

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  fail(ErrorCode::parse, "unknown format '" + std::string(text) + "' (expected csv or json)");
}

std::string to_decimal(const Complex& z, unsigned digits) {
  if (z.im().is_zero()) return to_decimal(z.re(), digits);
  std::string im = to_decimal(z.im(), digits);
  if (im.front() != '-') im.insert(im.begin(), '+');
  return to_decimal(z.re(), digits) + im + "i";
}

namespace {

std::string exact_text(const ExactComplex& x) { return to_string(x); }

std::string shortest(double x) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, result.ptr);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string optional_decimal(const std::optional<Real>& x, unsigned digits) {
  return x ? to_decimal(*x, digits) : std::string();
}

Json optional_json(const std::optional<Real>& x, unsigned digits) {
  return x ? Json(to_decimal(*x, digits)) : Json(nullptr);
}

constexpr unsigned kResidualDigits = 6;

}  // namespace

std::string matrix_csv(const BetaMatrix& b, unsigned digits, bool exact) {
  if (exact) {
    const auto m = b.dense_exact();
    std::ostringstream out;
    for (std::size_t s = 0; s < m.rows(); ++s) {
      for (std::size_t t = 0; t < m.cols(); ++t) out << (t ? "," : "") << exact_text(m(s, t));
      out << "\n";
    }
    return out.str();
  }
  const auto m = b.dense(Precision::for_digits(digits));
  std::ostringstream out;
  for (std::size_t s = 0; s < m.rows(); ++s) {
    for (std::size_t t = 0; t < m.cols(); ++t) out << (t ? "," : "") << to_decimal(m(s, t), digits);
    out << "\n";
  }
  return out.str();
}

std::string poly_json(const ExactPoly& poly, const BetaParam& beta, unsigned digits, bool exact) {
  Json coeffs = Json::array();
  const Precision p = Precision::for_digits(digits);
  for (const auto& c : poly.coeffs()) coeffs.push_back(exact ? exact_text(c) : to_decimal(Complex(c, p), digits));
  Json j;
  j["degree"] = poly.degree();
  j["coeffs"] = std::move(coeffs);
  j["beta"] = beta.to_string();
  j["exact"] = exact;
  return dump(j);
}

std::string roots_report(const RootSet& roots, const BetaParam& beta, unsigned digits, Format format) {
  const auto order = report_order(roots.roots);
  if (format == Format::csv) {
    std::ostringstream out;
    out << "re,im,residual\n";
    for (const std::size_t i : order) {
      out << to_decimal(roots.roots[i].re(), digits) << "," << to_decimal(roots.roots[i].im(), digits) << ","
          << to_decimal(roots.residuals[i], kResidualDigits) << "\n";
    }
    return out.str();
  }
  Json list = Json::array();
  for (const std::size_t i : order) {
    list.push_back({{"re", to_decimal(roots.roots[i].re(), digits)},
                    {"im", to_decimal(roots.roots[i].im(), digits)},
                    {"residual", to_decimal(roots.residuals[i], kResidualDigits)}});
  }
  Json j;
  j["beta"] = beta.to_string();
  j["n"] = roots.size();
  j["precision_bits"] = roots.precision_bits;
  j["roots"] = std::move(list);
  return dump(j);
}

std::string cluster_report(const std::vector<ClusterReport>& reports, unsigned digits, Format format) {
  if (format == Format::csv) {
    std::ostringstream out;
    out << "n,beta,epsilon,outside_count\n";
    for (const auto& r : reports) {
      out << r.n << "," << r.beta << "," << shortest(r.epsilon) << "," << r.outside_count << "\n";
    }
    return out.str();
  }
  Json list = Json::array();
  for (const auto& r : reports) {
    Json points = Json::array();
    for (const auto& z : r.outside_points) {
      points.push_back({{"re", to_decimal(z.re(), digits)}, {"im", to_decimal(z.im(), digits)}});
    }
    list.push_back({{"n", r.n},
                    {"beta", r.beta},
                    {"epsilon", r.epsilon},
                    {"inside_count", r.inside_count},
                    {"outside_count", r.outside_count},
                    {"outside_points", std::move(points)}});
  }
  return dump(list);
}

std::string outlier_report(const std::vector<OutlierRecord>& records, unsigned digits, Format format) {
  if (format == Format::csv) {
    std::ostringstream out;
    out << "n,large,small,err_large,err_small\n";
    for (const auto& r : records) {
      out << r.n << "," << optional_decimal(r.large, digits) << "," << optional_decimal(r.small, digits) << ","
          << optional_decimal(r.err_large, kResidualDigits) << "," << optional_decimal(r.err_small, kResidualDigits)
          << "\n";
    }
    return out.str();
  }
  Json list = Json::array();
  for (const auto& r : records) {
    Json item = {{"n", r.n},
                 {"beta", r.beta},
                 {"large", optional_json(r.large, digits)},
                 {"small", optional_json(r.small, digits)},
                 {"err_large", optional_json(r.err_large, digits)},
                 {"err_small", optional_json(r.err_small, digits)},
                 {"annulus_outliers", r.annulus_outliers}};
    if (!r.diagnostic.empty()) item["diagnostic"] = r.diagnostic;
    list.push_back(std::move(item));
  }
  return dump(list);
}

std::string singular_report(const std::vector<Real>& values, const BetaParam& beta, unsigned digits,
                            Format format) {
  if (format == Format::csv) {
    std::ostringstream out;
    out << "index,sigma\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << "," << to_decimal(values[i], digits) << "\n";
    return out.str();
  }
  Json list = Json::array();
  for (const auto& v : values) list.push_back(to_decimal(v, digits));
  Json j;
  j["beta"] = beta.to_string();
  j["n"] = values.size();
  j["precision_bits"] = values.empty() ? 0UL : values.front().precision().bits();
  j["singular_values"] = std::move(list);
  return dump(j);
}

std::string weyl_report(const std::vector<WeylReport>& reports, unsigned digits, Format format) {
  if (format == Format::csv) {
    std::ostringstream out;
    out << "n,F_id,empirical,reference,gap\n";
    for (const auto& r : reports) {
      out << r.n << "," << test_function_name(r.function) << "," << to_decimal(r.empirical, digits) << ","
          << to_decimal(r.reference, digits) << "," << to_decimal(r.gap, digits) << "\n";
    }
    return out.str();
  }
  Json list = Json::array();
  for (const auto& r : reports) {
    list.push_back({{"n", r.n},
                    {"F_id", test_function_name(r.function)},
                    {"kind", weyl_kind_name(r.kind)},
                    {"empirical", to_decimal(r.empirical, digits)},
                    {"reference", to_decimal(r.reference, digits)},
                    {"gap", to_decimal(r.gap, digits)}});
  }
  return dump(list);
}

std::string beta1_report(const std::vector<AsymptoticFit>& fits, const Real* c2, unsigned digits, Format format) {
  if (format == Format::csv) {
    std::ostringstream out;
    out << "n,c0_est,c1_est\n";
    for (const auto& f : fits) out << f.n << "," << to_decimal(f.c0_est, digits) << "," << to_decimal(f.c1_est, digits) << "\n";
    return out.str();
  }
  Json list = Json::array();
  for (const auto& f : fits) {
    list.push_back({{"n", f.n},
                    {"lambda_M", to_decimal(f.lambda_max, digits)},
                    {"c0_est", to_decimal(f.c0_est, digits)},
                    {"c1_est", to_decimal(f.c1_est, digits)},
                    {"iterations", f.iterations},
                    {"below_n", f.lambda_max < Real(f.n, f.lambda_max.precision())}});
  }
  Json j;
  j["fits"] = std::move(list);
  if (c2 != nullptr) j["c2_richardson"] = to_decimal(*c2, digits);
  return dump(j);
}

std::string power_trace_json(const PowerTrace& trace) {
  Json iterates = Json::array();
  for (const auto& v : trace.iterates) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(x.get_str());
    iterates.push_back(std::move(row));
  }
  Json first = Json::array();
  for (const auto& x : trace.first_components) first.push_back(x.get_str());
  Json ratios = Json::array();
  for (const auto& r : trace.ratios) ratios.push_back(to_string(r));
  Json j;
  j["n"] = trace.n;
  j["iterates"] = std::move(iterates);
  j["first_components"] = std::move(first);
  j["ratios"] = std::move(ratios);
  return dump(j);
}

// -------------------------------------------------------------- reproduce

namespace {

constexpr std::size_t kFigureOrders[] = {50, 100, 200, 400};
constexpr unsigned kScatterDigits = 20;

Bundle figure(std::string_view name, std::string_view beta_text, double epsilon) {
  const BetaParam beta = BetaParam::parse(beta_text);
  Bundle bundle;
  std::vector<ClusterReport> clusters;
  for (const std::size_t n : kFigureOrders) {
    const RootSet roots = spectrum(beta, n);
    std::ostringstream out;
    out << "re,im\n";
    for (const std::size_t i : report_order(roots.roots)) {
      out << to_decimal(roots.roots[i].re(), kScatterDigits) << "," << to_decimal(roots.roots[i].im(), kScatterDigits)
          << "\n";
    }
    bundle.files.emplace_back(std::string(name) + "_n" + std::to_string(n) + ".csv", out.str());
    clusters.push_back(cluster_count(roots, epsilon, beta));
  }
  bundle.files.emplace_back(std::string(name) + "_clusters.csv", cluster_report(clusters, kScatterDigits, Format::csv));
  return bundle;
}

Bundle outlier_digits() {
  const BetaParam beta = BetaParam::parse("4/3");
  std::ostringstream out;
  out << "n,lambda_M\n";
  for (const std::size_t n : kFigureOrders) {
    const OutlierRecord r = find_outliers(beta, n, 55);
    out << n << "," << optional_decimal(r.large, 51) << "\n";
  }
  return {{{"outlier_digits.csv", out.str()}}};
}

Bundle table1() {
  std::ostringstream out;
  out << "n,k,first_component,closed_form,match,r_k\n";
  for (const std::size_t n : {10, 50, 100}) {
    const PowerTrace trace = power_method_trace(n, 6);
    for (unsigned k = 1; k <= 5; ++k) {
      const Integer computed = trace.first_components[k];
      const Integer closed = table_first_component(k, Integer(static_cast<unsigned long>(n)));
      out << n << "," << k << "," << computed.get_str() << "," << closed.get_str() << ","
          << (computed == closed ? "true" : "false") << "," << to_string(trace.ratios[k]) << "\n";
    }
  }
  return {{{"table1.csv", out.str()}}};
}

Bundle table2() {
  std::vector<AsymptoticFit> fits;
  for (const std::size_t n : kFigureOrders) fits.push_back(lambda_max_beta1(n, 30));
  return {{{"table2.csv", beta1_report(fits, nullptr, 12, Format::csv)}}};
}

}  // namespace

std::vector<std::string_view> reproduce_targets() {
  return {"fig1", "fig2", "fig3", "outlier-digits", "table1", "table2"};
}

Bundle reproduce(std::string_view target) {
  if (target == "fig1") return figure("fig1", "5", 0.05);
  if (target == "fig2") return figure("fig2", "3", 0.05);
  if (target == "fig3") return figure("fig3", "4/3", 0.1);
  if (target == "outlier-digits") return outlier_digits();
  if (target == "table1") return table1();
  if (target == "table2") return table2();
  fail(ErrorCode::unknown_target, "unknown reproduce target '" + std::string(target) +
                                      "' (expected fig1, fig2, fig3, outlier-digits, table1, table2)");
}

}  // namespace betaspec
