// Domain types shared by every analysis module: the observed data set,
// returns-to-scale regimes, orientations and the per-unit ratio table.
#ifndef FDH_MODEL_HPP_
#define FDH_MODEL_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fdh/error.hpp"
#include "fdh/numeric.hpp"

namespace fdh {

// Returns-to-scale regime; selects the feasible region of the scaling
// factor applied to a single reference unit.
enum class Delta { kVrs, kCrs, kNirs, kNdrs };

inline constexpr std::array<Delta, 4> kAllDeltas = {Delta::kVrs, Delta::kCrs,
                                                    Delta::kNirs, Delta::kNdrs};

std::string_view to_string(Delta delta);
// Accepts "vrs", "crs", "nirs", "ndrs" (case-insensitive).
Delta parse_delta(std::string_view text);

// Scaling-factor region of a regime: lower bound 0 or 1, upper bound 1 or
// unbounded. VRS {1}; CRS [0, inf); NIRS [0, 1]; NDRS [1, inf).
struct DeltaRegion {
  bool lower_is_one;
  bool upper_is_one;
};
DeltaRegion region_of(Delta delta);

enum class Orientation { kInput, kOutput };
std::string_view to_string(Orientation orientation);
Orientation parse_orientation(std::string_view text);

// Unvalidated tabular data as it arrives from an external source.
template <Scalar T>
struct RawTable {
  std::vector<std::string> names;
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  std::vector<std::vector<T>> inputs;   // one row per unit
  std::vector<std::vector<T>> outputs;  // one row per unit
};

// n units, each consuming m strictly positive inputs and producing s strictly
// positive outputs. Immutable once constructed.
template <Scalar T>
class BasicDataset {
 public:
  std::size_t size() const { return names_.size(); }
  std::size_t num_inputs() const { return input_labels_.size(); }
  std::size_t num_outputs() const { return output_labels_.size(); }

  const std::string& name(std::size_t j) const { return names_.at(j); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::string>& input_labels() const { return input_labels_; }
  const std::vector<std::string>& output_labels() const { return output_labels_; }

  const T& input(std::size_t j, std::size_t i) const {
    return inputs_[j * num_inputs() + i];
  }
  const T& output(std::size_t j, std::size_t r) const {
    return outputs_[j * num_outputs() + r];
  }
  std::span<const T> inputs_of(std::size_t j) const {
    return {inputs_.data() + j * num_inputs(), num_inputs()};
  }
  std::span<const T> outputs_of(std::size_t j) const {
    return {outputs_.data() + j * num_outputs(), num_outputs()};
  }

  // Throws kIndexOutOfRange naming the offending index.
  void check_index(std::size_t j) const;
  // Throws kInvalidArgument for unknown names.
  std::size_t index_of(std::string_view name) const;

  // Converts an exact data set into the floating-point one used by the
  // fast path.
  template <Scalar U>
  BasicDataset<U> cast() const;

  template <Scalar U>
  friend BasicDataset<U> validate_dataset(RawTable<U> raw);
  template <Scalar U>
  friend class BasicDataset;

 private:
  BasicDataset() = default;

  std::vector<std::string> names_;
  std::vector<std::string> input_labels_;
  std::vector<std::string> output_labels_;
  std::vector<T> inputs_;
  std::vector<T> outputs_;
};

using Dataset = BasicDataset<double>;
using ExactDataset = BasicDataset<Rational>;

// Errors: kEmptyDataset, kRaggedRows, kNonpositiveValue, kDuplicateName.
// Missing column labels are generated as x1.., y1...
template <Scalar T>
BasicDataset<T> validate_dataset(RawTable<T> raw);

// Convenience for literal data in code and tests.
template <Scalar T>
BasicDataset<T> make_dataset(std::vector<std::string> names,
                             std::vector<std::vector<T>> inputs,
                             std::vector<std::vector<T>> outputs) {
  RawTable<T> raw;
  raw.names = std::move(names);
  raw.inputs = std::move(inputs);
  raw.outputs = std::move(outputs);
  return validate_dataset(std::move(raw));
}

// Worst-case input and output proportions of every unit j relative to the
// reference unit o:
//   alpha[j] = max_i x_ij / x_io,   beta[j] = min_r y_rj / y_ro.
// alpha[o] = beta[o] = 1.
template <Scalar T>
struct RatioTable {
  std::size_t reference = 0;
  std::vector<T> alpha;
  std::vector<T> beta;

  std::size_t size() const { return alpha.size(); }
};

// Errors: kIndexOutOfRange.
template <Scalar T>
RatioTable<T> ratio_table(const BasicDataset<T>& d, std::size_t o);

// ---------------------------------------------------------------------------

template <Scalar T>
template <Scalar U>
BasicDataset<U> BasicDataset<T>::cast() const {
  BasicDataset<U> out;
  out.names_ = names_;
  out.input_labels_ = input_labels_;
  out.output_labels_ = output_labels_;
  out.inputs_.reserve(inputs_.size());
  out.outputs_.reserve(outputs_.size());
  for (const auto& v : inputs_) {
    if constexpr (std::same_as<T, U>) out.inputs_.push_back(v);
    else if constexpr (is_exact_v<T>) out.inputs_.push_back(to_double(v));
    else out.inputs_.push_back(U(v));
  }
  for (const auto& v : outputs_) {
    if constexpr (std::same_as<T, U>) out.outputs_.push_back(v);
    else if constexpr (is_exact_v<T>) out.outputs_.push_back(to_double(v));
    else out.outputs_.push_back(U(v));
  }
  return out;
}

}  // namespace fdh

#endif  // FDH_MODEL_HPP_
