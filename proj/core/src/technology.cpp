#include "fdh/technology.hpp"

#include <string>

namespace fdh {

namespace {

template <Scalar T>
void check_point(const BasicDataset<T>& d, const Point<T>& p) {
  if (p.x.size() != d.num_inputs() || p.y.size() != d.num_outputs()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has " + std::to_string(p.x.size()) + " inputs and " +
                    std::to_string(p.y.size()) + " outputs; data set has " +
                    std::to_string(d.num_inputs()) + " and " +
                    std::to_string(d.num_outputs()));
  }
  for (const auto& v : p.x) {
    if (v < 0) throw Error(ErrorCode::kInvalidArgument, "negative input coordinate");
  }
  for (const auto& v : p.y) {
    if (v < 0) throw Error(ErrorCode::kInvalidArgument, "negative output coordinate");
  }
}

// (x_j, y_j) = c * (x_o, y_o) for a single c > 0.
template <Scalar T>
bool proportional(const BasicDataset<T>& d, std::size_t j, std::size_t o) {
  const T c = d.input(j, 0) / d.input(o, 0);
  for (std::size_t i = 1; i < d.num_inputs(); ++i) {
    if (d.input(j, i) / d.input(o, i) != c) return false;
  }
  for (std::size_t r = 0; r < d.num_outputs(); ++r) {
    if (d.output(j, r) / d.output(o, r) != c) return false;
  }
  return true;
}

}  // namespace

template <Scalar T>
bool member(const BasicDataset<T>& d, Delta delta, const Point<T>& p) {
  check_point(d, p);
  const DeltaRegion region = region_of(delta);
  for (std::size_t j = 0; j < d.size(); ++j) {
    // Feasible delta for unit j: [max_r p.y_r / y_rj, min_i p.x_i / x_ij].
    T lower(0);
    for (std::size_t r = 0; r < d.num_outputs(); ++r) {
      T bound = p.y[r] / d.output(j, r);
      if (bound > lower) lower = std::move(bound);
    }
    T upper = p.x[0] / d.input(j, 0);
    for (std::size_t i = 1; i < d.num_inputs(); ++i) {
      T bound = p.x[i] / d.input(j, i);
      if (bound < upper) upper = std::move(bound);
    }
    if (region.lower_is_one && lower < 1) lower = T(1);
    if (region.upper_is_one && upper > 1) upper = T(1);
    if (lower <= upper) return true;
  }
  return false;
}

template <Scalar T>
bool interior_member(const BasicDataset<T>& d, const Point<T>& p) {
  check_point(d, p);
  for (const auto& v : p.y) {
    if (!(v > 0)) return false;
  }
  for (std::size_t j = 0; j < d.size(); ++j) {
    bool strict = true;
    for (std::size_t i = 0; i < d.num_inputs() && strict; ++i) {
      strict = d.input(j, i) < p.x[i];
    }
    for (std::size_t r = 0; r < d.num_outputs() && strict; ++r) {
      strict = d.output(j, r) > p.y[r];
    }
    if (strict) return true;
  }
  return false;
}

template <Scalar T>
std::optional<std::size_t> dominating_unit(const BasicDataset<T>& d, Delta delta,
                                           std::size_t o) {
  const RatioTable<T> table = ratio_table(d, o);
  const DeltaRegion region = region_of(delta);
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j == o) continue;
    const T& alpha = table.alpha[j];
    const T& beta = table.beta[j];
    // delta * x_j <= x_o and delta * y_j >= y_o  <=>  1/beta <= delta <= 1/alpha.
    if (alpha > beta) continue;
    if (region.lower_is_one && alpha > 1) continue;
    if (region.upper_is_one && beta < 1) continue;
    if (proportional(d, j, o)) continue;
    return j;
  }
  return std::nullopt;
}

#define FDH_INSTANTIATE(T)                                                       \
  template bool member<T>(const BasicDataset<T>&, Delta, const Point<T>&);       \
  template bool interior_member<T>(const BasicDataset<T>&, const Point<T>&);     \
  template std::optional<std::size_t> dominating_unit<T>(const BasicDataset<T>&, \
                                                         Delta, std::size_t);

FDH_INSTANTIATE(double)
FDH_INSTANTIATE(Rational)
#undef FDH_INSTANTIATE

}  // namespace fdh
