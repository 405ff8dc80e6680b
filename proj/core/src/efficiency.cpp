#include "fdh/efficiency.hpp"

#include <cassert>
#include <optional>

namespace fdh {

namespace {

template <Scalar T>
struct Best {
  std::optional<Score<T>> score;

  void offer(bool minimize, T value, std::size_t j, T delta) {
    if (!score || (minimize ? value < score->value : value > score->value)) {
      score = Score<T>{std::move(value), j, std::move(delta)};
    }
  }
};

}  // namespace

template <Scalar T>
Score<T> theta(const RatioTable<T>& table, Delta delta) {
  Best<T> best;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const T& a = table.alpha[j];
    const T& b = table.beta[j];
    switch (delta) {
      case Delta::kVrs:
        if (b >= 1) best.offer(true, a, j, T(1));
        break;
      case Delta::kCrs:
        best.offer(true, a / b, j, T(1) / b);
        break;
      case Delta::kNirs:
        if (b >= 1) best.offer(true, a / b, j, T(1) / b);
        break;
      case Delta::kNdrs:
        if (b >= 1) best.offer(true, a, j, T(1));
        else best.offer(true, a / b, j, T(1) / b);
        break;
    }
  }
  // The reference unit itself is always feasible with delta = 1.
  assert(best.score.has_value());
  return *best.score;
}

template <Scalar T>
Score<T> phi(const RatioTable<T>& table, Delta delta) {
  Best<T> best;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const T& a = table.alpha[j];
    const T& b = table.beta[j];
    switch (delta) {
      case Delta::kVrs:
        if (a <= 1) best.offer(false, b, j, T(1));
        break;
      case Delta::kCrs:
        best.offer(false, b / a, j, T(1) / a);
        break;
      case Delta::kNirs:
        if (a <= 1) best.offer(false, b, j, T(1));
        else best.offer(false, b / a, j, T(1) / a);
        break;
      case Delta::kNdrs:
        if (a <= 1) best.offer(false, b / a, j, T(1) / a);
        break;
    }
  }
  assert(best.score.has_value());
  return *best.score;
}

template <Scalar T>
Score<T> theta(const BasicDataset<T>& d, Delta delta, std::size_t o) {
  return theta(ratio_table(d, o), delta);
}

template <Scalar T>
Score<T> phi(const BasicDataset<T>& d, Delta delta, std::size_t o) {
  return phi(ratio_table(d, o), delta);
}

template <Scalar T>
EfficiencyScores<T> all_scores(const RatioTable<T>& table) {
  EfficiencyScores<T> out{
      {theta(table, Delta::kVrs), theta(table, Delta::kCrs), theta(table, Delta::kNirs),
       theta(table, Delta::kNdrs)},
      {phi(table, Delta::kVrs), phi(table, Delta::kCrs), phi(table, Delta::kNirs),
       phi(table, Delta::kNdrs)}};
  return out;
}

template <Scalar T>
bool is_mpss(const BasicDataset<T>& d, std::size_t o, const Tolerance& tol) {
  return equal(theta(d, Delta::kCrs, o).value, T(1), tol);
}

#define FDH_INSTANTIATE(T)                                                    \
  template Score<T> theta<T>(const RatioTable<T>&, Delta);                    \
  template Score<T> phi<T>(const RatioTable<T>&, Delta);                      \
  template Score<T> theta<T>(const BasicDataset<T>&, Delta, std::size_t);     \
  template Score<T> phi<T>(const BasicDataset<T>&, Delta, std::size_t);       \
  template EfficiencyScores<T> all_scores<T>(const RatioTable<T>&);           \
  template bool is_mpss<T>(const BasicDataset<T>&, std::size_t, const Tolerance&);

FDH_INSTANTIATE(double)
FDH_INSTANTIATE(Rational)
#undef FDH_INSTANTIATE

}  // namespace fdh
