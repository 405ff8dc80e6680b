#include "fdh/response.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fdh/technology.hpp"

namespace fdh {

template <Scalar T>
ResponseFunction<T>::ResponseFunction(std::size_t reference, std::vector<Step<T>> steps)
    : reference_(reference), steps_(std::move(steps)) {
  if (steps_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "response function needs at least one step");
  }
  for (std::size_t k = 1; k < steps_.size(); ++k) {
    if (!(steps_[k - 1].threshold < steps_[k].threshold) ||
        !(steps_[k - 1].value < steps_[k].value)) {
      throw Error(ErrorCode::kInvalidArgument, "response steps must strictly increase");
    }
  }
}

template <Scalar T>
const T& ResponseFunction<T>::operator()(const T& alpha) const {
  if (alpha < alpha_min()) {
    throw Error(ErrorCode::kOutOfDomain,
                "alpha " + to_string(alpha) + " below domain start " + to_string(alpha_min()));
  }
  auto it = std::upper_bound(steps_.begin(), steps_.end(), alpha,
                             [](const T& a, const Step<T>& s) { return a < s.threshold; });
  return std::prev(it)->value;
}

template <Scalar T>
ResponseFunction<T> build_response(const RatioTable<T>& table) {
  std::vector<std::size_t> order(table.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Ascending alpha; within equal alpha, descending beta so the first entry
  // of a group carries its maximum.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (table.alpha[a] != table.alpha[b]) return table.alpha[a] < table.alpha[b];
    return table.beta[a] > table.beta[b];
  });
  std::vector<Step<T>> steps;
  for (std::size_t j : order) {
    if (steps.empty() || table.beta[j] > steps.back().value) {
      steps.push_back({table.alpha[j], table.beta[j], j});
    }
  }
  return ResponseFunction<T>(table.reference, std::move(steps));
}

template <Scalar T>
ResponseFunction<T> build_response(const BasicDataset<T>& d, std::size_t o) {
  return build_response(ratio_table(d, o));
}

template <Scalar T>
StepDerivatives one_sided_step_derivatives(const ResponseFunction<T>& r) {
  const T one(1);
  if (r.alpha_min() > one || r(one) != one) {
    throw Error(ErrorCode::kInefficientUnit,
                "response at alpha = 1 differs from 1; unit is not VRS-efficient");
  }
  StepDerivatives out{StepDerivative::kZero, StepDerivative::kUndefined};
  // The step containing 1 extends to the right, so the right slope is 0.
  if (r.alpha_min() < one) {
    // Value on the last step strictly left of 1.
    const auto& steps = r.steps();
    auto it = std::lower_bound(steps.begin(), steps.end(), one,
                               [](const Step<T>& s, const T& a) { return s.threshold < a; });
    const T& left_value = std::prev(it)->value;
    out.left = left_value < one ? StepDerivative::kInfinite : StepDerivative::kZero;
  }
  return out;
}

template <Scalar T>
StepDerivatives one_sided_step_derivatives(const BasicDataset<T>& d, std::size_t o) {
  d.check_index(o);
  if (!is_efficient(d, Delta::kVrs, o)) {
    throw Error(ErrorCode::kInefficientUnit, "unit '" + d.name(o) + "' is not VRS-efficient");
  }
  return one_sided_step_derivatives(build_response(d, o));
}

const char* to_string(StepDerivative v) {
  switch (v) {
    case StepDerivative::kZero: return "0";
    case StepDerivative::kInfinite: return "inf";
    case StepDerivative::kUndefined: return "undefined";
  }
  return "?";
}

#define FDH_INSTANTIATE(T)                                                               \
  template class ResponseFunction<T>;                                                    \
  template ResponseFunction<T> build_response<T>(const RatioTable<T>&);                  \
  template ResponseFunction<T> build_response<T>(const BasicDataset<T>&, std::size_t);   \
  template StepDerivatives one_sided_step_derivatives<T>(const ResponseFunction<T>&);    \
  template StepDerivatives one_sided_step_derivatives<T>(const BasicDataset<T>&, std::size_t);

FDH_INSTANTIATE(double)
FDH_INSTANTIATE(Rational)
#undef FDH_INSTANTIATE

}  // namespace fdh
