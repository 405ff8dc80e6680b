// The output response of a unit to proportional input scaling in the VRS
// FDH technology: beta_o(a) = max{b : (a x_o, b y_o) in T}. Under free
// disposal with a single active unit this is a right-continuous step
// function, beta_o(a) = max{beta_j : alpha_j <= a}, defined for
// a >= min_j alpha_j.
#ifndef FDH_RESPONSE_HPP_
#define FDH_RESPONSE_HPP_

#include <cstddef>
#include <vector>

#include "fdh/model.hpp"

namespace fdh {

template <Scalar T>
struct Step {
  T threshold;
  T value;
  std::size_t unit;  // unit attaining the value

  friend bool operator==(const Step&, const Step&) = default;
};

template <Scalar T>
class ResponseFunction {
 public:
  ResponseFunction(std::size_t reference, std::vector<Step<T>> steps);

  std::size_t reference() const { return reference_; }
  // Left end of the domain.
  const T& alpha_min() const { return steps_.front().threshold; }
  // Strictly increasing thresholds and strictly increasing values.
  const std::vector<Step<T>>& steps() const { return steps_; }

  // Errors: kOutOfDomain when alpha < alpha_min().
  const T& operator()(const T& alpha) const;

 private:
  std::size_t reference_;
  std::vector<Step<T>> steps_;
};

template <Scalar T>
ResponseFunction<T> build_response(const BasicDataset<T>& d, std::size_t o);
template <Scalar T>
ResponseFunction<T> build_response(const RatioTable<T>& table);

// One-sided derivative of the step function at a = 1. A step function only
// ever has slope 0 or an infinite jump there.
enum class StepDerivative { kZero, kInfinite, kUndefined };

struct StepDerivatives {
  StepDerivative right;
  StepDerivative left;
};

// Requires beta_o(1) = 1, which every VRS-efficient unit satisfies;
// otherwise throws kInefficientUnit.
template <Scalar T>
StepDerivatives one_sided_step_derivatives(const ResponseFunction<T>& r);

// Checks full VRS efficiency of o first.
template <Scalar T>
StepDerivatives one_sided_step_derivatives(const BasicDataset<T>& d, std::size_t o);

const char* to_string(StepDerivative v);

}  // namespace fdh

#endif  // FDH_RESPONSE_HPP_
