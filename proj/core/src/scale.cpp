#include "fdh/scale.hpp"

#include "fdh/technology.hpp"

namespace fdh {

namespace {

template <Scalar T>
void require_efficient(const BasicDataset<T>& d, std::size_t o) {
  d.check_index(o);
  if (!is_efficient(d, Delta::kVrs, o)) {
    throw Error(ErrorCode::kInefficientUnit, "unit '" + d.name(o) + "' is not VRS-efficient");
  }
}

}  // namespace

template <Scalar T>
ScaleRatios<T> scale_ratios(const RatioTable<T>& table, const Tolerance& tol) {
  ScaleRatios<T> out{T(0), Extended<T>::infinity(), std::nullopt, std::nullopt};
  std::optional<T> best_plus;
  std::optional<T> best_minus;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const T& a = table.alpha[j];
    const T& b = table.beta[j];
    if (in_increment_set(a, tol)) {
      T ratio = (b - 1) / (a - 1);
      if (!best_plus || ratio > *best_plus) {
        best_plus = ratio;
        out.plus_witness = j;
      }
    } else if (in_decrement_set(a, tol)) {
      T ratio = (b - 1) / (a - 1);
      if (!best_minus || ratio < *best_minus) {
        best_minus = ratio;
        out.minus_witness = j;
      }
    }
  }
  // For a > 1 the response never drops below beta_o(1) = 1, so the supremum
  // is at least 0.
  if (best_plus && !(*best_plus < 0)) {
    out.sigma_plus = *best_plus;
  } else {
    out.plus_witness.reset();
  }
  if (best_minus) out.sigma_minus = Extended<T>::finite(*best_minus);
  return out;
}

template <Scalar T>
ScaleRatios<T> scale_ratios(const BasicDataset<T>& d, std::size_t o, const Tolerance& tol) {
  require_efficient(d, o);
  return scale_ratios(ratio_table(d, o), tol);
}

template <Scalar T>
std::pair<T, std::optional<std::size_t>> sigma_plus(const BasicDataset<T>& d, std::size_t o,
                                                    const Tolerance& tol) {
  ScaleRatios<T> r = scale_ratios(d, o, tol);
  return {r.sigma_plus, r.plus_witness};
}

template <Scalar T>
std::pair<Extended<T>, std::optional<std::size_t>> sigma_minus(const BasicDataset<T>& d,
                                                               std::size_t o,
                                                               const Tolerance& tol) {
  ScaleRatios<T> r = scale_ratios(d, o, tol);
  return {r.sigma_minus, r.minus_witness};
}

#define FDH_INSTANTIATE(T)                                                                \
  template ScaleRatios<T> scale_ratios<T>(const RatioTable<T>&, const Tolerance&);        \
  template ScaleRatios<T> scale_ratios<T>(const BasicDataset<T>&, std::size_t,            \
                                          const Tolerance&);                              \
  template std::pair<T, std::optional<std::size_t>> sigma_plus<T>(                        \
      const BasicDataset<T>&, std::size_t, const Tolerance&);                             \
  template std::pair<Extended<T>, std::optional<std::size_t>> sigma_minus<T>(             \
      const BasicDataset<T>&, std::size_t, const Tolerance&);

FDH_INSTANTIATE(double)
FDH_INSTANTIATE(Rational)
#undef FDH_INSTANTIATE

}  // namespace fdh
