// Brute-force reference computations. Everything here works from the raw
// data, component by component, and never calls the fast path; tests and
// the `verify` command compare the two.
#ifndef FDH_ORACLE_HPP_
#define FDH_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fdh/model.hpp"
#include "fdh/rts.hpp"

namespace fdh::oracle {

struct OracleConfig {
  std::size_t grid_steps = 10000;
  // Upper end of the alpha grid above 1; defaults to 10x the largest input
  // proportion of any unit.
  std::optional<double> alpha_max;
  // Points of the uniform response-function grid used by verification.
  std::size_t response_grid_steps = 100;
  std::uint64_t seed = 42;
  bool exact = true;

  // Errors: kInvalidArgument when grid_steps < 100 or alpha_max <= 1.
  void validate() const;
};

template <Scalar T>
struct OracleScore {
  T value;
  std::size_t witness;
};

// Enumerates every unit as the single active reference and both ends of its
// feasible scaling interval.
template <Scalar T>
OracleScore<T> oracle_theta(const BasicDataset<T>& d, Delta delta, std::size_t o);
template <Scalar T>
OracleScore<T> oracle_phi(const BasicDataset<T>& d, Delta delta, std::size_t o);

// Largest b with (alpha x_o, b y_o) in the VRS technology, found by testing
// every candidate b = y_rk / y_ro for membership. Empty below the domain.
template <Scalar T>
std::optional<T> oracle_response_value(const BasicDataset<T>& d, std::size_t o,
                                       const T& alpha);

template <Scalar T>
struct OracleRatio {
  T value;                            // optimum of the enumeration
  std::optional<std::size_t> witness; // unit attaining a nonzero optimum
  T grid_extreme;                     // best value seen on the alpha grid
  bool grid_consistent;               // grid never beats the optimum
};

// Maximum incremental ratio as the optimum of
//   max (b - 1) / (a - 1)  s.t.  x_j <= a x_o, y_j >= b y_o, a > 1, b >= 0
// over single-unit selections j, confirmed on an alpha grid.
// Errors: kInefficientUnit.
template <Scalar T>
OracleRatio<T> oracle_sigma_plus(const BasicDataset<T>& d, std::size_t o,
                                 const OracleConfig& cfg);

// Minimum decremental ratio over a in [a_min, 1); nullopt when the domain
// has no point left of 1. Errors: kInefficientUnit.
template <Scalar T>
std::optional<OracleRatio<T>> oracle_sigma_minus(const BasicDataset<T>& d, std::size_t o,
                                                 const OracleConfig& cfg);

// Single-unit feasibility systems in (lambda, delta):
//   kRightStrict  x_j <  d x_o, y_j >  d y_o, d > 1
//   kRightWeak    x_j <= d x_o, y_j >= d y_o, d > 1
//   kLeftWeak     x_j <= d x_o, y_j >= d y_o, 0 < d < 1
//   kLeftStrict   x_j <  d x_o, y_j >  d y_o, 0 < d < 1
enum class System { kRightStrict, kRightWeak, kLeftWeak, kLeftStrict };

// Decided exactly from interval endpoints. Errors: kIndexOutOfRange.
template <Scalar T>
bool oracle_system_feasible(const BasicDataset<T>& d, std::size_t o, System system);

// One-sided classes from the feasibility systems alone.
template <Scalar T>
RightRts oracle_right_rts(const BasicDataset<T>& d, std::size_t o);
template <Scalar T>
LeftRts oracle_left_rts(const BasicDataset<T>& d, std::size_t o);

// Pairwise dominance scan on raw data.
template <Scalar T>
bool oracle_vrs_efficient(const BasicDataset<T>& d, std::size_t o);

// {j : every output of j strictly exceeds that of o} and
// {j : some input of j strictly exceeds that of o}.
template <Scalar T>
std::vector<std::size_t> output_gain_set(const BasicDataset<T>& d, std::size_t o);
template <Scalar T>
std::vector<std::size_t> input_growth_set(const BasicDataset<T>& d, std::size_t o);

// Reproducible data set with small positive rational entries. Some units are
// exact multiples or duplicates of earlier ones so that boundary cases occur.
// Errors: kInvalidArgument unless 1 <= n <= 12 and 1 <= m, s <= 4.
ExactDataset random_dataset(std::uint64_t seed, std::size_t n, std::size_t m, std::size_t s);

// Same, with n in [1, max_n] and m, s in [1, max_dims] drawn from the seed.
ExactDataset random_dataset(std::uint64_t seed, std::size_t max_n = 8,
                            std::size_t max_dims = 3);

}  // namespace fdh::oracle

#endif  // FDH_ORACLE_HPP_
