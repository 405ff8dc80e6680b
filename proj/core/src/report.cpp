#include "fdh/report.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <variant>

#include "json.hpp"

namespace fdh {

namespace {

using Json = nlohmann::ordered_json;

Json number(double v) {
  const double rounded = round_significant(v);
  if (std::fabs(rounded) < 1e15 && rounded == std::floor(rounded)) {
    return static_cast<std::int64_t>(rounded);
  }
  return rounded;
}

template <Scalar T>
Json number(const T& v) {
  return number(to_double(v));
}

template <Scalar T>
Json extended(const Extended<T>& v) {
  if (v.is_infinite()) return "inf";
  return number(v.value());
}

template <Scalar T>
Json name_or_null(const BasicDataset<T>& d, const std::optional<std::size_t>& j) {
  if (!j) return nullptr;
  return d.name(*j);
}

template <Scalar T>
Json scores_json(const BasicDataset<T>& d, const EfficiencyScores<T>& s) {
  Json out;
  for (auto [key, orientation] : {std::pair{"input", Orientation::kInput},
                                  std::pair{"output", Orientation::kOutput}}) {
    Json block;
    for (Delta delta : kAllDeltas) {
      const Score<T>& sc = orientation == Orientation::kInput ? s.input(delta) : s.output(delta);
      block[std::string(to_string(delta))] = {{"score", number(sc.value)},
                                              {"witness", d.name(sc.witness)},
                                              {"delta", number(sc.witness_delta)}};
    }
    out[key] = std::move(block);
  }
  return out;
}

void fnv(std::uint64_t& h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  h ^= 0xff;
  h *= 1099511628211ULL;
}

}  // namespace

double round_significant(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

template <Scalar T>
std::string dataset_digest(const BasicDataset<T>& d) {
  std::uint64_t h = 14695981039346656037ULL;
  for (std::size_t j = 0; j < d.size(); ++j) {
    fnv(h, d.name(j));
    for (const auto& v : d.inputs_of(j)) fnv(h, to_string(to_double(v)));
    for (const auto& v : d.outputs_of(j)) fnv(h, to_string(to_double(v)));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

template <Scalar T>
std::string render_report(const BasicDataset<T>& d, const std::vector<UnitAssessment<T>>& units,
                          const ReportOptions& options) {
  Json doc;
  doc["tool"] = "fdh";
  doc["version"] = kToolVersion;
  doc["dataset_digest"] = dataset_digest(d);
  doc["tolerance"] = options.tol.eps();
  doc["arithmetic"] = is_exact_v<T> ? "exact" : "double";
  doc["projected"] = options.projected;
  doc["units"] = Json::array();
  for (const auto& unit : units) {
    Json rec;
    if (const auto* rep = std::get_if<RtsReport<T>>(&unit)) {
      rec["name"] = d.name(rep->unit);
      rec["efficient"] = true;
      if (options.include_scores) rec["scores"] = scores_json(d, rep->scores);
      rec["mpss"] = rep->mpss;
      rec["grs"] = to_string(rep->grs);
      rec["right_rts"] = to_string(rep->one_sided.right);
      rec["left_rts"] = to_string(rep->one_sided.left);
      rec["sigma_plus"] = number(rep->sigma.sigma_plus);
      rec["sigma_minus"] = extended(rep->sigma.sigma_minus);
      rec["witnesses"] = {{"sigma_plus", name_or_null(d, rep->sigma.plus_witness)},
                          {"sigma_minus", name_or_null(d, rep->sigma.minus_witness)},
                          {"dominated_by", nullptr}};
    } else {
      const auto& ineff = std::get<InefficientUnit<T>>(unit);
      rec["name"] = d.name(ineff.unit);
      rec["efficient"] = false;
      if (options.include_scores) rec["scores"] = scores_json(d, ineff.scores);
      rec["theta_vrs"] = number(ineff.scores.input(Delta::kVrs).value);
      rec["mpss"] = nullptr;
      rec["grs"] = nullptr;
      rec["right_rts"] = nullptr;
      rec["left_rts"] = nullptr;
      rec["sigma_plus"] = nullptr;
      rec["sigma_minus"] = nullptr;
      rec["witnesses"] = {{"sigma_plus", nullptr},
                          {"sigma_minus", nullptr},
                          {"dominated_by", d.name(ineff.dominator)}};
    }
    doc["units"].push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

template <Scalar T>
std::string render_ratios(const BasicDataset<T>& d, std::size_t o, const ScaleRatios<T>& r) {
  Json doc;
  doc["name"] = d.name(o);
  doc["sigma_plus"] = number(r.sigma_plus);
  doc["sigma_minus"] = extended(r.sigma_minus);
  doc["witnesses"] = {{"sigma_plus", name_or_null(d, r.plus_witness)},
                      {"sigma_minus", name_or_null(d, r.minus_witness)}};
  return doc.dump(2) + "\n";
}

template <Scalar T>
void write_response_csv(const ResponseFunction<T>& r, std::ostream& out,
                        std::optional<double> alpha_max) {
  out << "alpha_threshold,beta_value\n";
  char buf[64];
  for (const auto& step : r.steps()) {
    const double a = to_double(step.threshold);
    if (alpha_max && a > *alpha_max) break;
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", a, to_double(step.value));
    out << buf;
  }
}

void write_text(const std::string& text, const std::optional<std::filesystem::path>& path) {
  if (!path) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path->string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write to '" + path->string() + "' failed");
}

#define FDH_INSTANTIATE(T)                                                                   \
  template std::string dataset_digest<T>(const BasicDataset<T>&);                            \
  template std::string render_report<T>(const BasicDataset<T>&,                              \
                                        const std::vector<UnitAssessment<T>>&,               \
                                        const ReportOptions&);                               \
  template std::string render_ratios<T>(const BasicDataset<T>&, std::size_t,                 \
                                        const ScaleRatios<T>&);                              \
  template void write_response_csv<T>(const ResponseFunction<T>&, std::ostream&,             \
                                      std::optional<double>);

FDH_INSTANTIATE(double)
FDH_INSTANTIATE(Rational)
#undef FDH_INSTANTIATE

}  // namespace fdh
