// Membership in the FDH technologies under each returns-to-scale regime,
// interior membership of the VRS technology, and dominance-based efficiency.
#ifndef FDH_TECHNOLOGY_HPP_
#define FDH_TECHNOLOGY_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "fdh/model.hpp"

namespace fdh {

// An input/output pair; both vectors nonnegative.
template <Scalar T>
struct Point {
  std::vector<T> x;
  std::vector<T> y;
};

// True iff some unit j and some delta in the regime's region satisfy
// delta * x_j <= p.x and delta * y_j >= p.y.
// Errors: kDimensionMismatch, kInvalidArgument (negative coordinate).
template <Scalar T>
bool member(const BasicDataset<T>& d, Delta delta, const Point<T>& p);

// Interior of the VRS technology: some unit j with x_j < p.x and y_j > p.y
// componentwise, and p.y > 0.
template <Scalar T>
bool interior_member(const BasicDataset<T>& d, const Point<T>& p);

// Unit j with delta * (x_j, y_j) weakly dominating unit o for some delta in
// the regime's region, at a point different from (x_o, y_o). Lowest index
// wins. A unit proportional to o can only reach o itself and never
// dominates it.
template <Scalar T>
std::optional<std::size_t> dominating_unit(const BasicDataset<T>& d, Delta delta,
                                           std::size_t o);

template <Scalar T>
bool is_efficient(const BasicDataset<T>& d, Delta delta, std::size_t o) {
  return !dominating_unit(d, delta, o).has_value();
}

}  // namespace fdh

#endif  // FDH_TECHNOLOGY_HPP_
