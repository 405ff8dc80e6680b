// Cross-checks of the fast path against the brute-force oracle, tallied per
// relation. Used by the `verify` command and the acceptance suite.
#ifndef FDH_VERIFY_HPP_
#define FDH_VERIFY_HPP_

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "fdh/model.hpp"
#include "fdh/oracle.hpp"

namespace fdh::oracle {

struct CheckTally {
  std::string relation;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;  // first few failure descriptions
};

class VerificationReport {
 public:
  void record(const std::string& relation, bool ok, const std::string& detail = {});

  const std::vector<CheckTally>& rows() const { return rows_; }
  const CheckTally* find(const std::string& relation) const;
  bool passed() const;
  std::size_t datasets() const { return datasets_; }
  void count_dataset() { ++datasets_; }

  // Fixed-width table: relation, checks, failures, PASS/FAIL.
  void print(std::ostream& os) const;

 private:
  std::vector<CheckTally> rows_;
  std::size_t datasets_ = 0;
};

// Relation names, shared by callers that look rows up.
namespace relation {
inline constexpr const char* kScores = "closed-form scores = enumeration";
inline constexpr const char* kFloatScores = "floating scores = exact scores";
inline constexpr const char* kEfficiency = "VRS efficiency = pairwise dominance";
inline constexpr const char* kMpss = "MPSS = enumerated CRS score of 1";
inline constexpr const char* kOneSidedSigma = "ratio-test classes = sigma thresholds";
inline constexpr const char* kOneSidedSystems = "ratio-test classes = feasibility systems";
inline constexpr const char* kGlobalImplications = "global class implications";
inline constexpr const char* kScrsBounds = "G-SCRS has sigma+ > 1 and sigma- < 1";
inline constexpr const char* kIrsIncrementSet = "G-IRS: increment set nonempty, S1 within it";
inline constexpr const char* kSigmaPlus = "sigma+ = optimization optimum";
inline constexpr const char* kSigmaMinus = "sigma- = enumeration optimum";
inline constexpr const char* kGrid = "alpha grid never beats ratios";
inline constexpr const char* kResponse = "response steps = membership oracle";
inline constexpr const char* kStepDerivatives = "step derivatives in {0, inf}";
inline constexpr const char* kFloatClasses = "floating classes = exact classes";
}  // namespace relation

// Checks every unit of `d` and appends to `report`.
void verify_dataset(const ExactDataset& d, const OracleConfig& cfg, const Tolerance& tol,
                    VerificationReport& report);

// `trials` random data sets seeded from cfg.seed, cfg.seed + 1, ...
VerificationReport verify_random(const OracleConfig& cfg, std::size_t trials,
                                 const Tolerance& tol = {});

}  // namespace fdh::oracle

#endif  // FDH_VERIFY_HPP_
