#include "fdh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <variant>

#include "fdh/efficiency.hpp"
#include "fdh/response.hpp"
#include "fdh/rts.hpp"
#include "fdh/scale.hpp"
#include "fdh/technology.hpp"

namespace fdh::oracle {

namespace {

constexpr std::size_t kMaxSamples = 5;

std::string where(const ExactDataset& d, std::size_t o) {
  std::ostringstream os;
  os << "unit " << d.name(o) << " of " << d.size() << "x(" << d.num_inputs() << ","
     << d.num_outputs() << ")";
  return os.str();
}

bool close(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max({1.0, std::fabs(a), std::fabs(b)});
}

void check_response(const ExactDataset& d, std::size_t o, const OracleConfig& cfg,
                    VerificationReport& report) {
  const auto response = build_response(d, o);
  const auto& steps = response.steps();
  std::vector<Rational> probes;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    probes.push_back(steps[k].threshold);
    if (k + 1 < steps.size()) probes.push_back((steps[k].threshold + steps[k + 1].threshold) / 2);
  }
  probes.push_back(steps.back().threshold + 1);
  const Rational top = std::max(Rational(3), steps.back().threshold + 1);
  for (std::size_t k = 0; k <= cfg.response_grid_steps; ++k) {
    probes.push_back(response.alpha_min() +
                     (top - response.alpha_min()) * k / cfg.response_grid_steps);
  }
  bool ok = true;
  bool monotone = true;
  std::optional<Rational> previous;
  std::sort(probes.begin(), probes.end());
  for (const auto& alpha : probes) {
    const auto expected = oracle_response_value(d, o, alpha);
    ok = ok && expected && *expected == response(alpha);
    if (previous && response(alpha) < *previous) monotone = false;
    previous = response(alpha);
  }
  // Nothing exists left of the domain.
  const auto below = oracle_response_value(d, o, Rational(response.alpha_min() / 2));
  ok = ok && monotone && !below.has_value();
  report.record(relation::kResponse, ok, where(d, o));
}

}  // namespace

void VerificationReport::record(const std::string& relation, bool ok, const std::string& detail) {
  auto it = std::find_if(rows_.begin(), rows_.end(),
                         [&](const CheckTally& row) { return row.relation == relation; });
  if (it == rows_.end()) {
    rows_.push_back(CheckTally{relation});
    it = std::prev(rows_.end());
  }
  ++it->checks;
  if (!ok) {
    ++it->failures;
    if (it->samples.size() < kMaxSamples) it->samples.push_back(detail);
  }
}

const CheckTally* VerificationReport::find(const std::string& relation) const {
  for (const auto& row : rows_) {
    if (row.relation == relation) return &row;
  }
  return nullptr;
}

bool VerificationReport::passed() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](const CheckTally& row) { return row.failures == 0; });
}

void VerificationReport::print(std::ostream& os) const {
  os << std::left << std::setw(48) << "relation" << std::right << std::setw(10) << "checks"
     << std::setw(10) << "failures" << "  status\n";
  for (const auto& row : rows_) {
    os << std::left << std::setw(48) << row.relation << std::right << std::setw(10)
       << row.checks << std::setw(10) << row.failures << "  "
       << (row.failures == 0 ? "PASS" : "FAIL") << "\n";
    for (const auto& sample : row.samples) os << "    failed at " << sample << "\n";
  }
  os << datasets_ << " data set(s); overall " << (passed() ? "PASS" : "FAIL") << "\n";
}

void verify_dataset(const ExactDataset& d, const OracleConfig& cfg, const Tolerance& tol,
                    VerificationReport& report) {
  cfg.validate();
  report.count_dataset();
  const Dataset fast = d.cast<double>();
  const auto exact_classes = classify_all(d, tol);
  const auto float_classes = classify_all(fast, tol);

  for (std::size_t o = 0; o < d.size(); ++o) {
    const std::string at = where(d, o);

    bool scores_ok = true;
    bool float_ok = true;
    for (Delta delta : kAllDeltas) {
      const auto t = theta(d, delta, o);
      const auto p = phi(d, delta, o);
      scores_ok = scores_ok && t.value == oracle_theta(d, delta, o).value &&
                  p.value == oracle_phi(d, delta, o).value;
      float_ok = float_ok && close(theta(fast, delta, o).value, to_double(t.value), 1e-12) &&
                 close(phi(fast, delta, o).value, to_double(p.value), 1e-12);
    }
    report.record(relation::kScores, scores_ok, at);
    report.record(relation::kFloatScores, float_ok, at);

    const bool efficient = is_efficient(d, Delta::kVrs, o);
    report.record(relation::kEfficiency, efficient == oracle_vrs_efficient(d, o), at);
    report.record(relation::kMpss,
                  is_mpss(d, o, tol) == (oracle_theta(d, Delta::kCrs, o).value == 1), at);

    const auto* exact_report = std::get_if<RtsReport<Rational>>(&exact_classes[o]);
    const auto* float_report = std::get_if<RtsReport<double>>(&float_classes[o]);
    if (!efficient) {
      report.record(relation::kFloatClasses, float_report == nullptr, at);
      continue;
    }
    if (exact_report == nullptr || float_report == nullptr) {
      report.record(relation::kFloatClasses, false, at);
      continue;
    }
    const RtsReport<Rational>& rep = *exact_report;

    report.record(relation::kFloatClasses,
                  float_report->one_sided.right == rep.one_sided.right &&
                      float_report->one_sided.left == rep.one_sided.left &&
                      float_report->grs == rep.grs && float_report->mpss == rep.mpss,
                  at);

    report.record(relation::kOneSidedSigma,
                  right_rts_from_sigma(rep.sigma.sigma_plus, tol) == rep.one_sided.right &&
                      left_rts_from_sigma(rep.sigma.sigma_minus, tol) == rep.one_sided.left,
                  at);
    report.record(relation::kOneSidedSystems,
                  oracle_right_rts(d, o) == rep.one_sided.right &&
                      oracle_left_rts(d, o) == rep.one_sided.left,
                  at);
    report.record(relation::kGlobalImplications, check_consistency(rep, tol).empty(), at);
    if (rep.grs == GrsClass::kScrs) {
      report.record(relation::kScrsBounds,
                    rep.sigma.sigma_plus > 1 && rep.sigma.sigma_minus.is_finite() &&
                        rep.sigma.sigma_minus.value() < 1,
                    at);
    }

    const auto plus = oracle_sigma_plus(d, o, cfg);
    report.record(relation::kSigmaPlus, plus.value == rep.sigma.sigma_plus, at);
    if (rep.grs == GrsClass::kIrs) {
      const auto growth = input_growth_set(d, o);
      const auto gain = output_gain_set(d, o);
      const bool subset = std::all_of(gain.begin(), gain.end(), [&](std::size_t j) {
        return std::find(growth.begin(), growth.end(), j) != growth.end();
      });
      report.record(relation::kIrsIncrementSet, !growth.empty() && !gain.empty() && subset, at);
    }
    const auto minus = oracle_sigma_minus(d, o, cfg);
    report.record(relation::kSigmaMinus,
                  minus ? (rep.sigma.sigma_minus.is_finite() &&
                           rep.sigma.sigma_minus.value() == minus->value)
                        : rep.sigma.sigma_minus.is_infinite(),
                  at);
    report.record(relation::kGrid, plus.grid_consistent && (!minus || minus->grid_consistent),
                  at);

    check_response(d, o, cfg, report);
    const auto response = build_response(d, o);
    const auto derivs = one_sided_step_derivatives(response);
    const bool at_domain_start = response.alpha_min() == 1;
    report.record(relation::kStepDerivatives,
                  derivs.right == StepDerivative::kZero &&
                      derivs.left == (at_domain_start ? StepDerivative::kUndefined
                                                      : StepDerivative::kInfinite),
                  at);
  }
}

VerificationReport verify_random(const OracleConfig& cfg, std::size_t trials,
                                 const Tolerance& tol) {
  VerificationReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    verify_dataset(random_dataset(cfg.seed + t), cfg, tol, report);
  }
  return report;
}

}  // namespace fdh::oracle
