// Finite-difference counterparts of scale elasticity for VRS-efficient units:
//
//   sigma_plus  = sup_{a > 1}   (beta_o(a) - 1) / (a - 1)   (maximum incremental ratio)
//   sigma_minus = min_{a_min <= a < 1} (beta_o(a) - 1) / (a - 1)   (minimum decremental ratio)
//
// Both reduce to a scan of the ratio table:
//   sigma_plus  = max(0, max_{alpha_j > 1} (beta_j - 1) / (alpha_j - 1))
//   sigma_minus = min_{alpha_j < 1} (beta_j - 1) / (alpha_j - 1), +inf if no such j.
#ifndef FDH_SCALE_HPP_
#define FDH_SCALE_HPP_

#include <cstddef>
#include <optional>
#include <utility>

#include "fdh/model.hpp"

namespace fdh {

template <Scalar T>
struct ScaleRatios {
  T sigma_plus;
  Extended<T> sigma_minus;
  // Unit attaining each ratio; empty when sigma_plus is the 0 floor or
  // sigma_minus is infinite.
  std::optional<std::size_t> plus_witness;
  std::optional<std::size_t> minus_witness;
};

// Units whose worst input proportion exceeds 1 (resp. falls below 1) by more
// than the tolerance.
template <Scalar T>
bool in_increment_set(const T& alpha, const Tolerance& tol) {
  return greater(alpha, T(1), tol);
}
template <Scalar T>
bool in_decrement_set(const T& alpha, const Tolerance& tol) {
  return less(alpha, T(1), tol);
}

// Errors: kIndexOutOfRange, kInefficientUnit.
template <Scalar T>
std::pair<T, std::optional<std::size_t>> sigma_plus(const BasicDataset<T>& d, std::size_t o,
                                                    const Tolerance& tol = {});
template <Scalar T>
std::pair<Extended<T>, std::optional<std::size_t>> sigma_minus(const BasicDataset<T>& d,
                                                               std::size_t o,
                                                               const Tolerance& tol = {});

template <Scalar T>
ScaleRatios<T> scale_ratios(const BasicDataset<T>& d, std::size_t o, const Tolerance& tol = {});

// Same scans on a precomputed table; no efficiency check.
template <Scalar T>
ScaleRatios<T> scale_ratios(const RatioTable<T>& table, const Tolerance& tol = {});

}  // namespace fdh

#endif  // FDH_SCALE_HPP_
