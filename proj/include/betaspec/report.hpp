#pragma once
// Text renderings (CSV / JSON) of every analysis, and the bundles written by
// `reproduce`. All output is deterministic for fixed inputs.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betaspec/betamatrix.hpp"
#include "betaspec/charpoly.hpp"
#include "betaspec/limitcase.hpp"
#include "betaspec/rootfind.hpp"
#include "betaspec/spectra.hpp"

namespace betaspec {

enum class Format { csv, json };

Format parse_format(std::string_view text);

/// Decimal string of a complex value: "re" when the imaginary part is zero,
/// otherwise "re+imi" / "re-imi".
std::string to_decimal(const Complex& z, unsigned digits);

/// Dense B_n, one row per line. Exact "p/q" entries when `exact`.
std::string matrix_csv(const BetaMatrix& b, unsigned digits, bool exact);

/// {"degree", "coeffs" (low to high), "beta", "exact"}
std::string poly_json(const ExactPoly& poly, const BetaParam& beta, unsigned digits, bool exact);

/// Roots in report order. JSON: {"beta", "n", "precision_bits", "roots":
/// [{"re", "im", "residual"}]}; CSV columns re,im,residual.
std::string roots_report(const RootSet& roots, const BetaParam& beta, unsigned digits, Format format);

/// CSV columns n,beta,epsilon,outside_count.
std::string cluster_report(const std::vector<ClusterReport>& reports, unsigned digits, Format format);

/// CSV columns n,large,small,err_large,err_small (empty when absent).
std::string outlier_report(const std::vector<OutlierRecord>& records, unsigned digits, Format format);

/// CSV columns index,sigma.
std::string singular_report(const std::vector<Real>& values, const BetaParam& beta, unsigned digits,
                            Format format);

/// CSV columns n,F_id,empirical,reference,gap.
std::string weyl_report(const std::vector<WeylReport>& reports, unsigned digits, Format format);

/// CSV columns n,c0_est,c1_est. The JSON form adds lambda_M, the iteration
/// count, the Gerschgorin check and, when given, the Richardson c_2 estimate.
std::string beta1_report(const std::vector<AsymptoticFit>& fits, const Real* c2, unsigned digits, Format format);

/// {"n", "iterates", "first_components", "ratios"}; integers in decimal,
/// ratios as "p/q".
std::string power_trace_json(const PowerTrace& trace);

/// Named text files.
struct Bundle {
  std::vector<std::pair<std::string, std::string>> files;
};

/// One of fig1, fig2, fig3, outlier-digits, table1, table2.
Bundle reproduce(std::string_view target);

std::vector<std::string_view> reproduce_targets();

}  // namespace betaspec
