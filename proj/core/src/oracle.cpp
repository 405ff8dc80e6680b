#include "fdh/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "fdh/error.hpp"

namespace fdh::oracle {

namespace {

// Interval of the real line with optional unbounded upper end.
template <Scalar T>
struct Interval {
  T lower;
  bool lower_open;
  std::optional<T> upper;
  bool upper_open;

  void raise_lower(const T& v, bool open) {
    if (v > lower || (v == lower && open)) {
      lower = v;
      lower_open = open;
    }
  }
  void cap_upper(const T& v, bool open) {
    if (!upper || v < *upper || (v == *upper && open)) {
      upper = v;
      upper_open = open;
    }
  }
  bool empty() const {
    if (!upper) return false;
    if (lower < *upper) return false;
    if (*upper < lower) return true;
    return lower_open || upper_open;
  }
};

template <Scalar T>
void require_vrs_efficient(const BasicDataset<T>& d, std::size_t o) {
  d.check_index(o);
  if (!oracle_vrs_efficient(d, o)) {
    throw Error(ErrorCode::kInefficientUnit, "unit '" + d.name(o) + "' is not VRS-efficient");
  }
}

// max_i x_ij / x_io and min_r y_rj / y_ro, recomputed here component by
// component.
template <Scalar T>
T worst_input_ratio(const BasicDataset<T>& d, std::size_t j, std::size_t o) {
  T best = d.input(j, 0) / d.input(o, 0);
  for (std::size_t i = 1; i < d.num_inputs(); ++i) best = std::max(best, T(d.input(j, i) / d.input(o, i)));
  return best;
}
template <Scalar T>
T worst_output_ratio(const BasicDataset<T>& d, std::size_t j, std::size_t o) {
  T best = d.output(j, 0) / d.output(o, 0);
  for (std::size_t r = 1; r < d.num_outputs(); ++r) best = std::min(best, T(d.output(j, r) / d.output(o, r)));
  return best;
}

template <Scalar T>
bool inputs_fit(const BasicDataset<T>& d, std::size_t j, std::size_t o, const T& alpha) {
  for (std::size_t i = 0; i < d.num_inputs(); ++i) {
    if (d.input(j, i) > alpha * d.input(o, i)) return false;
  }
  return true;
}

template <Scalar T>
T grid_point(const T& from, const T& to, std::size_t k, std::size_t steps) {
  return from + (to - from) * T(k) / T(steps);
}

}  // namespace

void OracleConfig::validate() const {
  if (grid_steps < 100) {
    throw Error(ErrorCode::kInvalidArgument, "grid_steps must be at least 100");
  }
  if (alpha_max && !(*alpha_max > 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha_max must exceed 1");
  }
}

template <Scalar T>
OracleScore<T> oracle_theta(const BasicDataset<T>& d, Delta delta, std::size_t o) {
  d.check_index(o);
  const DeltaRegion region = region_of(delta);
  std::optional<OracleScore<T>> best;
  for (std::size_t j = 0; j < d.size(); ++j) {
    // delta * y_rj >= y_ro for every r.
    Interval<T> feasible{T(0), false, std::nullopt, false};
    for (std::size_t r = 0; r < d.num_outputs(); ++r) {
      feasible.raise_lower(d.output(o, r) / d.output(j, r), false);
    }
    if (region.lower_is_one) feasible.raise_lower(T(1), false);
    if (region.upper_is_one) feasible.cap_upper(T(1), false);
    if (feasible.empty()) continue;
    // Smallest theta with delta * x_ij <= theta * x_io for all i, at each end.
    std::vector<T> ends{feasible.lower};
    if (feasible.upper) ends.push_back(*feasible.upper);
    for (const T& delta_value : ends) {
      T value(0);
      for (std::size_t i = 0; i < d.num_inputs(); ++i) {
        value = std::max(value, T(delta_value * d.input(j, i) / d.input(o, i)));
      }
      if (!best || value < best->value) best = OracleScore<T>{value, j};
    }
  }
  return *best;
}

template <Scalar T>
OracleScore<T> oracle_phi(const BasicDataset<T>& d, Delta delta, std::size_t o) {
  d.check_index(o);
  const DeltaRegion region = region_of(delta);
  std::optional<OracleScore<T>> best;
  for (std::size_t j = 0; j < d.size(); ++j) {
    // delta * x_ij <= x_io for every i.
    Interval<T> feasible{T(0), false, std::nullopt, false};
    for (std::size_t i = 0; i < d.num_inputs(); ++i) {
      feasible.cap_upper(d.input(o, i) / d.input(j, i), false);
    }
    if (region.lower_is_one) feasible.raise_lower(T(1), false);
    if (region.upper_is_one) feasible.cap_upper(T(1), false);
    if (feasible.empty()) continue;
    for (const T& delta_value : {feasible.lower, *feasible.upper}) {
      std::optional<T> value;
      for (std::size_t r = 0; r < d.num_outputs(); ++r) {
        T ratio = delta_value * d.output(j, r) / d.output(o, r);
        if (!value || ratio < *value) value = ratio;
      }
      if (!best || *value > best->value) best = OracleScore<T>{*value, j};
    }
  }
  return *best;
}

template <Scalar T>
std::optional<T> oracle_response_value(const BasicDataset<T>& d, std::size_t o,
                                       const T& alpha) {
  d.check_index(o);
  std::optional<T> best;
  for (std::size_t k = 0; k < d.size(); ++k) {
    for (std::size_t q = 0; q < d.num_outputs(); ++q) {
      const T candidate = d.output(k, q) / d.output(o, q);
      if (best && !(candidate > *best)) continue;
      // Is (alpha x_o, candidate y_o) dominated by some observed unit?
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (!inputs_fit(d, j, o, alpha)) continue;
        bool outputs_fit = true;
        for (std::size_t r = 0; r < d.num_outputs() && outputs_fit; ++r) {
          outputs_fit = d.output(j, r) >= candidate * d.output(o, r);
        }
        if (outputs_fit) {
          best = candidate;
          break;
        }
      }
    }
  }
  return best;
}

template <Scalar T>
OracleRatio<T> oracle_sigma_plus(const BasicDataset<T>& d, std::size_t o,
                                 const OracleConfig& cfg) {
  cfg.validate();
  require_vrs_efficient(d, o);
  // Enumeration: for unit j the objective is maximised at b = worst output
  // ratio; with b > 1 it decreases in a, so a sits at the worst input
  // ratio; with b <= 1 its supremum is 0 (a -> infinity, or any a if b = 1).
  OracleRatio<T> out{T(0), std::nullopt, T(0), true};
  T largest_alpha(1);
  for (std::size_t j = 0; j < d.size(); ++j) {
    const T a = worst_input_ratio(d, j, o);
    const T b = worst_output_ratio(d, j, o);
    largest_alpha = std::max(largest_alpha, a);
    if (b > 1) {
      // a <= 1 would make j dominate o.
      const T value = (b - 1) / (a - 1);
      if (value > out.value) {
        out.value = value;
        out.witness = j;
      }
    }
  }
  const T top = cfg.alpha_max ? T(*cfg.alpha_max) : T(largest_alpha * 10);
  std::optional<T> grid_best;
  for (std::size_t k = 1; k <= cfg.grid_steps; ++k) {
    const T alpha = grid_point(T(1), top, k, cfg.grid_steps);
    std::optional<T> response;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (!inputs_fit(d, j, o, alpha)) continue;
      T b = worst_output_ratio(d, j, o);
      if (!response || b > *response) response = b;
    }
    const T value = (*response - 1) / (alpha - 1);
    if (!grid_best || value > *grid_best) grid_best = value;
  }
  out.grid_extreme = *grid_best;
  out.grid_consistent = !(out.grid_extreme > out.value);
  return out;
}

template <Scalar T>
std::optional<OracleRatio<T>> oracle_sigma_minus(const BasicDataset<T>& d, std::size_t o,
                                                 const OracleConfig& cfg) {
  cfg.validate();
  require_vrs_efficient(d, o);
  // For a < 1 and b < 1 the objective (1 - b) / (1 - a) is smallest at the
  // largest b and the smallest admissible a.
  std::optional<OracleRatio<T>> out;
  T alpha_min(1);
  for (std::size_t j = 0; j < d.size(); ++j) {
    const T a = worst_input_ratio(d, j, o);
    alpha_min = std::min(alpha_min, a);
    if (!(a < 1)) continue;
    const T b = worst_output_ratio(d, j, o);
    const T value = (b - 1) / (a - 1);
    if (!out || value < out->value) out = OracleRatio<T>{value, j, T(0), true};
  }
  if (!out) return std::nullopt;
  std::optional<T> grid_best;
  for (std::size_t k = 0; k < cfg.grid_steps; ++k) {
    const T alpha = grid_point(alpha_min, T(1), k, cfg.grid_steps);
    std::optional<T> response;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (!inputs_fit(d, j, o, alpha)) continue;
      T b = worst_output_ratio(d, j, o);
      if (!response || b > *response) response = b;
    }
    const T value = (*response - 1) / (alpha - 1);
    if (!grid_best || value < *grid_best) grid_best = value;
  }
  out->grid_extreme = *grid_best;
  out->grid_consistent = !(out->grid_extreme < out->value);
  return out;
}

template <Scalar T>
bool oracle_system_feasible(const BasicDataset<T>& d, std::size_t o, System system) {
  d.check_index(o);
  const bool strict = system == System::kRightStrict || system == System::kLeftStrict;
  const bool right = system == System::kRightStrict || system == System::kRightWeak;
  for (std::size_t j = 0; j < d.size(); ++j) {
    Interval<T> feasible{T(0), true, std::nullopt, false};
    if (right) {
      feasible.raise_lower(T(1), true);
    } else {
      feasible.cap_upper(T(1), true);
    }
    // x_ij (<) delta x_io  and  y_rj (>) delta y_ro.
    for (std::size_t i = 0; i < d.num_inputs(); ++i) {
      feasible.raise_lower(d.input(j, i) / d.input(o, i), strict);
    }
    for (std::size_t r = 0; r < d.num_outputs(); ++r) {
      feasible.cap_upper(d.output(j, r) / d.output(o, r), strict);
    }
    if (!feasible.empty()) return true;
  }
  return false;
}

template <Scalar T>
RightRts oracle_right_rts(const BasicDataset<T>& d, std::size_t o) {
  if (oracle_system_feasible(d, o, System::kRightStrict)) return RightRts::kIrs;
  if (!oracle_system_feasible(d, o, System::kRightWeak)) return RightRts::kDrs;
  return RightRts::kCrs;
}

template <Scalar T>
LeftRts oracle_left_rts(const BasicDataset<T>& d, std::size_t o) {
  if (oracle_system_feasible(d, o, System::kLeftStrict)) return LeftRts::kDrs;
  if (!oracle_system_feasible(d, o, System::kLeftWeak)) return LeftRts::kIrs;
  return LeftRts::kCrs;
}

template <Scalar T>
bool oracle_vrs_efficient(const BasicDataset<T>& d, std::size_t o) {
  d.check_index(o);
  for (std::size_t j = 0; j < d.size(); ++j) {
    bool weakly = true;
    bool differs = false;
    for (std::size_t i = 0; i < d.num_inputs() && weakly; ++i) {
      weakly = d.input(j, i) <= d.input(o, i);
      differs = differs || d.input(j, i) != d.input(o, i);
    }
    for (std::size_t r = 0; r < d.num_outputs() && weakly; ++r) {
      weakly = d.output(j, r) >= d.output(o, r);
      differs = differs || d.output(j, r) != d.output(o, r);
    }
    if (weakly && differs) return false;
  }
  return true;
}

template <Scalar T>
std::vector<std::size_t> output_gain_set(const BasicDataset<T>& d, std::size_t o) {
  d.check_index(o);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < d.size(); ++j) {
    bool all = true;
    for (std::size_t r = 0; r < d.num_outputs() && all; ++r) all = d.output(j, r) > d.output(o, r);
    if (all) out.push_back(j);
  }
  return out;
}

template <Scalar T>
std::vector<std::size_t> input_growth_set(const BasicDataset<T>& d, std::size_t o) {
  d.check_index(o);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < d.size(); ++j) {
    for (std::size_t i = 0; i < d.num_inputs(); ++i) {
      if (d.input(j, i) > d.input(o, i)) {
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

ExactDataset random_dataset(std::uint64_t seed, std::size_t n, std::size_t m, std::size_t s) {
  if (n < 1 || n > 12 || m < 1 || m > 4 || s < 1 || s > 4) {
    throw Error(ErrorCode::kInvalidArgument, "random_dataset needs 1<=n<=12 and 1<=m,s<=4");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(1, 12);
  std::uniform_int_distribution<int> denominator(1, 4);
  std::uniform_int_distribution<int> percent(0, 99);
  const Rational multiples[] = {Rational(1), Rational(2), Rational(3, 2), Rational(1, 2),
                                Rational(3)};
  std::uniform_int_distribution<int> pick_multiple(0, 4);

  RawTable<Rational> raw;
  for (std::size_t j = 0; j < n; ++j) {
    raw.names.push_back("U" + std::to_string(j + 1));
    std::vector<Rational> x(m);
    std::vector<Rational> y(s);
    if (j > 0 && percent(rng) < 20) {
      std::uniform_int_distribution<std::size_t> pick_unit(0, j - 1);
      const std::size_t base = pick_unit(rng);
      const Rational c = multiples[pick_multiple(rng)];
      for (std::size_t i = 0; i < m; ++i) x[i] = raw.inputs[base][i] * c;
      for (std::size_t r = 0; r < s; ++r) y[r] = raw.outputs[base][r] * c;
    } else {
      for (auto& v : x) v = Rational(numerator(rng), denominator(rng));
      for (auto& v : y) v = Rational(numerator(rng), denominator(rng));
    }
    raw.inputs.push_back(std::move(x));
    raw.outputs.push_back(std::move(y));
  }
  return validate_dataset(std::move(raw));
}

ExactDataset random_dataset(std::uint64_t seed, std::size_t max_n, std::size_t max_dims) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
  std::uniform_int_distribution<std::size_t> pick_dim(1, max_dims);
  const std::size_t n = pick_n(rng);
  const std::size_t m = pick_dim(rng);
  const std::size_t s = pick_dim(rng);
  return random_dataset(seed, n, m, s);
}

#define FDH_INSTANTIATE(T)                                                                  \
  template OracleScore<T> oracle_theta<T>(const BasicDataset<T>&, Delta, std::size_t);      \
  template OracleScore<T> oracle_phi<T>(const BasicDataset<T>&, Delta, std::size_t);        \
  template std::optional<T> oracle_response_value<T>(const BasicDataset<T>&, std::size_t,   \
                                                     const T&);                             \
  template OracleRatio<T> oracle_sigma_plus<T>(const BasicDataset<T>&, std::size_t,         \
                                               const OracleConfig&);                        \
  template std::optional<OracleRatio<T>> oracle_sigma_minus<T>(                             \
      const BasicDataset<T>&, std::size_t, const OracleConfig&);                            \
  template bool oracle_system_feasible<T>(const BasicDataset<T>&, std::size_t, System);     \
  template RightRts oracle_right_rts<T>(const BasicDataset<T>&, std::size_t);               \
  template LeftRts oracle_left_rts<T>(const BasicDataset<T>&, std::size_t);                 \
  template bool oracle_vrs_efficient<T>(const BasicDataset<T>&, std::size_t);               \
  template std::vector<std::size_t> output_gain_set<T>(const BasicDataset<T>&, std::size_t); \
  template std::vector<std::size_t> input_growth_set<T>(const BasicDataset<T>&, std::size_t);

FDH_INSTANTIATE(double)
FDH_INSTANTIATE(Rational)
#undef FDH_INSTANTIATE

}  // namespace fdh::oracle
