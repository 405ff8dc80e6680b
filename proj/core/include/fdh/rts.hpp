// Returns-to-scale classification of VRS-efficient units.
//
// One-sided classes describe what happens to the ray z(d) = (d x_o, d y_o):
//   Right-IRS  z(d) is interior to T for some d > 1
//   Right-DRS  z(d) lies outside T for every d > 1
//   Left-IRS   z(d) lies outside T for every 0 < d < 1
//   Left-DRS   z(d) is interior to T for some 0 < d < 1
// and the CRS classes cover the remaining cases. They are decided by
// polynomial ratio tests on the ratio table and agree with the position of
// sigma_plus / sigma_minus relative to 1.
//
// The global class (G-CRS, G-SCRS, G-IRS, G-DRS) compares the input scores
// under CRS, NIRS and NDRS.
#ifndef FDH_RTS_HPP_
#define FDH_RTS_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "fdh/efficiency.hpp"
#include "fdh/model.hpp"
#include "fdh/scale.hpp"

namespace fdh {

enum class RightRts { kIrs, kDrs, kCrs };
enum class LeftRts { kIrs, kDrs, kCrs };
enum class GrsClass { kCrs, kScrs, kIrs, kDrs };

std::string_view to_string(RightRts v);
std::string_view to_string(LeftRts v);
std::string_view to_string(GrsClass v);

struct OneSidedRts {
  RightRts right;
  LeftRts left;
};

// Ratio tests. Right-IRS iff some j has beta_j > 1 and alpha_j < beta_j;
// Right-DRS iff every j has beta_j <= 1 or beta_j < alpha_j.
// Left-DRS iff some j has alpha_j < 1 and alpha_j < beta_j;
// Left-IRS iff every j has alpha_j >= 1 or beta_j < alpha_j.
template <Scalar T>
RightRts right_rts(const RatioTable<T>& table, const Tolerance& tol = {});
template <Scalar T>
LeftRts left_rts(const RatioTable<T>& table, const Tolerance& tol = {});

// Errors: kIndexOutOfRange, kInefficientUnit.
template <Scalar T>
RightRts right_rts(const BasicDataset<T>& d, std::size_t o, const Tolerance& tol = {});
template <Scalar T>
LeftRts left_rts(const BasicDataset<T>& d, std::size_t o, const Tolerance& tol = {});

// Class implied by the ratio's position relative to 1.
template <Scalar T>
RightRts right_rts_from_sigma(const T& sigma_plus, const Tolerance& tol = {});
template <Scalar T>
LeftRts left_rts_from_sigma(const Extended<T>& sigma_minus, const Tolerance& tol = {});

// Errors: kUnclassifiable when the scores fit none of the four patterns.
template <Scalar T>
GrsClass grs(const EfficiencyScores<T>& scores, const Tolerance& tol = {});
// Errors: kIndexOutOfRange, kInefficientUnit, kUnclassifiable.
template <Scalar T>
GrsClass grs(const BasicDataset<T>& d, std::size_t o, const Tolerance& tol = {});

template <Scalar T>
struct RtsReport {
  std::size_t unit;
  OneSidedRts one_sided;
  GrsClass grs;
  ScaleRatios<T> sigma;
  bool mpss;
  EfficiencyScores<T> scores;
};

template <Scalar T>
struct InefficientUnit {
  std::size_t unit;
  EfficiencyScores<T> scores;  // scores.input(Delta::kVrs) is theta_V with its witness
  std::size_t dominator;       // an observed unit dominating this one
};

template <Scalar T>
using UnitAssessment = std::variant<RtsReport<T>, InefficientUnit<T>>;

// Errors: kIndexOutOfRange, kUnclassifiable.
template <Scalar T>
UnitAssessment<T> classify_unit(const BasicDataset<T>& d, std::size_t o,
                                const Tolerance& tol = {});

// One entry per unit, in input order.
template <Scalar T>
std::vector<UnitAssessment<T>> classify_all(const BasicDataset<T>& d, const Tolerance& tol = {});

enum class Violation {
  kRightVsSigmaPlus,   // right class disagrees with sigma_plus vs 1
  kLeftVsSigmaMinus,   // left class disagrees with sigma_minus vs 1
  kGrsIrsNotRightIrs,  // G-IRS without Right-IRS / sigma_plus > 1
  kGrsDrsNotLeftDrs,   // G-DRS without Left-DRS / sigma_minus < 1
  kGrsCrsBounds,       // G-CRS without Right-NIRS, Left-NDRS, sigma bounds
  kGrsScrsBounds,      // G-SCRS without Right-IRS, Left-DRS, sigma bounds
};
std::string_view to_string(Violation v);

// Relations that must hold between the one-sided classes, the global class
// and the ratios of a single efficient unit. Returns the violated ones.
template <Scalar T>
std::vector<Violation> check_consistency(const RtsReport<T>& report, const Tolerance& tol = {});

}  // namespace fdh

#endif  // FDH_RTS_HPP_
