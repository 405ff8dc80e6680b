// Radial FDH efficiency scores for every returns-to-scale regime.
//
// Both programs select exactly one reference unit j scaled by delta, so each
// score is the best value over j of a one-dimensional problem whose optimum
// sits at an end of j's feasible delta interval. With the ratio table
// (alpha_j, beta_j) of unit o:
//
//   input  theta:  VRS  min{alpha_j : beta_j >= 1}
//                  CRS  min alpha_j / beta_j
//                  NIRS min{alpha_j / beta_j : beta_j >= 1}
//                  NDRS min max(alpha_j, alpha_j / beta_j)
//   output phi:    VRS  max{beta_j : alpha_j <= 1}
//                  CRS  max beta_j / alpha_j
//                  NIRS max beta_j * min(1, 1 / alpha_j)
//                  NDRS max{beta_j / alpha_j : alpha_j <= 1}
//
// See docs/derivations.md for the derivation.
#ifndef FDH_EFFICIENCY_HPP_
#define FDH_EFFICIENCY_HPP_

#include <array>
#include <cstddef>

#include "fdh/model.hpp"

namespace fdh {

// Optimal value with the reference unit and scaling factor that attain it.
template <Scalar T>
struct Score {
  T value;
  std::size_t witness;
  T witness_delta;
};

template <Scalar T>
struct EfficiencyScores {
  std::array<Score<T>, 4> theta;  // indexed by Delta
  std::array<Score<T>, 4> phi;

  const Score<T>& input(Delta delta) const { return theta[static_cast<int>(delta)]; }
  const Score<T>& output(Delta delta) const { return phi[static_cast<int>(delta)]; }
};

// Input-oriented score; ties resolve to the lowest unit index.
// Errors: kIndexOutOfRange.
template <Scalar T>
Score<T> theta(const BasicDataset<T>& d, Delta delta, std::size_t o);
template <Scalar T>
Score<T> theta(const RatioTable<T>& table, Delta delta);

// Output-oriented score.
template <Scalar T>
Score<T> phi(const BasicDataset<T>& d, Delta delta, std::size_t o);
template <Scalar T>
Score<T> phi(const RatioTable<T>& table, Delta delta);

template <Scalar T>
Score<T> score(const BasicDataset<T>& d, Delta delta, Orientation orientation,
               std::size_t o) {
  return orientation == Orientation::kInput ? theta(d, delta, o) : phi(d, delta, o);
}

template <Scalar T>
EfficiencyScores<T> all_scores(const RatioTable<T>& table);
template <Scalar T>
EfficiencyScores<T> all_scores(const BasicDataset<T>& d, std::size_t o) {
  return all_scores(ratio_table(d, o));
}

// Most productive scale size: theta under CRS equals 1 within tolerance.
template <Scalar T>
bool is_mpss(const BasicDataset<T>& d, std::size_t o, const Tolerance& tol = {});

}  // namespace fdh

#endif  // FDH_EFFICIENCY_HPP_
