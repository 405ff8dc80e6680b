// JSON report documents and CSV export of response steps.
#ifndef FDH_REPORT_HPP_
#define FDH_REPORT_HPP_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fdh/model.hpp"
#include "fdh/response.hpp"
#include "fdh/rts.hpp"

namespace fdh {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportOptions {
  Tolerance tol;
  bool include_scores = true;
  // Units were radially projected onto the output frontier before
  // classification.
  bool projected = false;
};

// Deterministic document: header plus one record per unit in input order.
// Scores carry 12 significant digits; an infinite sigma_minus is "inf".
template <Scalar T>
std::string render_report(const BasicDataset<T>& d, const std::vector<UnitAssessment<T>>& units,
                          const ReportOptions& options);

// Ratios of one efficient unit.
template <Scalar T>
std::string render_ratios(const BasicDataset<T>& d, std::size_t o, const ScaleRatios<T>& ratios);

// Two-column CSV alpha_threshold,beta_value; steps above alpha_max dropped.
template <Scalar T>
void write_response_csv(const ResponseFunction<T>& r, std::ostream& out,
                        std::optional<double> alpha_max = std::nullopt);

// Writes to `path`, or stdout when empty. Errors: kIoError.
void write_text(const std::string& text, const std::optional<std::filesystem::path>& path);

// Stable 64-bit FNV-1a digest of names and values, as 16 hex digits.
template <Scalar T>
std::string dataset_digest(const BasicDataset<T>& d);

// Value rounded to 12 significant digits, as printed in reports.
double round_significant(double v);

}  // namespace fdh

#endif  // FDH_REPORT_HPP_
