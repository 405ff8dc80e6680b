#include "fdh/model.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_set>

namespace fdh {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

template <Scalar T>
void check_block(const std::vector<std::vector<T>>& rows, std::size_t n,
                 std::vector<std::string>& labels, const char* prefix,
                 const std::vector<std::string>& names, const char* what) {
  if (rows.size() != n) {
    throw Error(ErrorCode::kRaggedRows, std::string("expected ") + std::to_string(n) +
                                            " " + what + " rows, got " +
                                            std::to_string(rows.size()));
  }
  const std::size_t width = labels.empty() ? rows.front().size() : labels.size();
  if (width == 0) {
    throw Error(ErrorCode::kEmptyDataset, std::string("no ") + what + " columns");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (rows[j].size() != width) {
      throw Error(ErrorCode::kRaggedRows,
                  "unit '" + names[j] + "' has " + std::to_string(rows[j].size()) + " " +
                      what + " values, expected " + std::to_string(width));
    }
    for (std::size_t k = 0; k < width; ++k) {
      if (!(rows[j][k] > 0)) {
        throw Error(ErrorCode::kNonpositiveValue,
                    "unit '" + names[j] + "' " + what + " " + std::to_string(k + 1) +
                        " is not strictly positive (" + to_string(rows[j][k]) + ")");
      }
    }
  }
  if (labels.empty()) {
    for (std::size_t k = 0; k < width; ++k) labels.push_back(prefix + std::to_string(k + 1));
  }
}

}  // namespace

std::string_view to_string(Delta delta) {
  switch (delta) {
    case Delta::kVrs: return "vrs";
    case Delta::kCrs: return "crs";
    case Delta::kNirs: return "nirs";
    case Delta::kNdrs: return "ndrs";
  }
  return "?";
}

Delta parse_delta(std::string_view text) {
  const std::string t = lower(text);
  if (t == "vrs") return Delta::kVrs;
  if (t == "crs") return Delta::kCrs;
  if (t == "nirs") return Delta::kNirs;
  if (t == "ndrs") return Delta::kNdrs;
  throw Error(ErrorCode::kInvalidArgument, "unknown technology '" + std::string(text) + "'");
}

DeltaRegion region_of(Delta delta) {
  switch (delta) {
    case Delta::kVrs: return {true, true};
    case Delta::kCrs: return {false, false};
    case Delta::kNirs: return {false, true};
    case Delta::kNdrs: return {true, false};
  }
  return {true, true};
}

std::string_view to_string(Orientation orientation) {
  return orientation == Orientation::kInput ? "input" : "output";
}

Orientation parse_orientation(std::string_view text) {
  const std::string t = lower(text);
  if (t == "input") return Orientation::kInput;
  if (t == "output") return Orientation::kOutput;
  throw Error(ErrorCode::kInvalidArgument, "unknown orientation '" + std::string(text) + "'");
}

template <Scalar T>
void BasicDataset<T>::check_index(std::size_t j) const {
  if (j >= size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "unit index " + std::to_string(j) +
                                                 " out of range for " +
                                                 std::to_string(size()) + " units");
  }
}

template <Scalar T>
std::size_t BasicDataset<T>::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "no unit named '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - names_.begin());
}

template <Scalar T>
BasicDataset<T> validate_dataset(RawTable<T> raw) {
  const std::size_t n = raw.names.size();
  if (n == 0) throw Error(ErrorCode::kEmptyDataset, "data set has no units");

  std::unordered_set<std::string> seen;
  for (const auto& name : raw.names) {
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::kDuplicateName, "unit name '" + name + "' appears twice");
    }
  }
  check_block(raw.inputs, n, raw.input_labels, "x", raw.names, "input");
  check_block(raw.outputs, n, raw.output_labels, "y", raw.names, "output");

  BasicDataset<T> d;
  d.names_ = std::move(raw.names);
  d.input_labels_ = std::move(raw.input_labels);
  d.output_labels_ = std::move(raw.output_labels);
  for (auto& row : raw.inputs) {
    for (auto& v : row) d.inputs_.push_back(std::move(v));
  }
  for (auto& row : raw.outputs) {
    for (auto& v : row) d.outputs_.push_back(std::move(v));
  }
  return d;
}

template <Scalar T>
RatioTable<T> ratio_table(const BasicDataset<T>& d, std::size_t o) {
  d.check_index(o);
  RatioTable<T> table;
  table.reference = o;
  table.alpha.reserve(d.size());
  table.beta.reserve(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j == o) {
      table.alpha.emplace_back(1);
      table.beta.emplace_back(1);
      continue;
    }
    T alpha = d.input(j, 0) / d.input(o, 0);
    for (std::size_t i = 1; i < d.num_inputs(); ++i) {
      T ratio = d.input(j, i) / d.input(o, i);
      if (ratio > alpha) alpha = std::move(ratio);
    }
    T beta = d.output(j, 0) / d.output(o, 0);
    for (std::size_t r = 1; r < d.num_outputs(); ++r) {
      T ratio = d.output(j, r) / d.output(o, r);
      if (ratio < beta) beta = std::move(ratio);
    }
    table.alpha.push_back(std::move(alpha));
    table.beta.push_back(std::move(beta));
  }
  return table;
}

#define FDH_INSTANTIATE(T)                                                   \
  template class BasicDataset<T>;                                            \
  template BasicDataset<T> validate_dataset<T>(RawTable<T>);                 \
  template RatioTable<T> ratio_table<T>(const BasicDataset<T>&, std::size_t);

FDH_INSTANTIATE(double)
FDH_INSTANTIATE(Rational)
#undef FDH_INSTANTIATE

}  // namespace fdh
