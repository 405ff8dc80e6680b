#include "fdh/rts.hpp"

#include "fdh/technology.hpp"

namespace fdh {

namespace {

template <Scalar T>
void require_efficient(const BasicDataset<T>& d, std::size_t o) {
  d.check_index(o);
  if (!is_efficient(d, Delta::kVrs, o)) {
    throw Error(ErrorCode::kInefficientUnit, "unit '" + d.name(o) + "' is not VRS-efficient");
  }
}

}  // namespace

std::string_view to_string(RightRts v) {
  switch (v) {
    case RightRts::kIrs: return "Right-IRS";
    case RightRts::kDrs: return "Right-DRS";
    case RightRts::kCrs: return "Right-CRS";
  }
  return "?";
}

std::string_view to_string(LeftRts v) {
  switch (v) {
    case LeftRts::kIrs: return "Left-IRS";
    case LeftRts::kDrs: return "Left-DRS";
    case LeftRts::kCrs: return "Left-CRS";
  }
  return "?";
}

std::string_view to_string(GrsClass v) {
  switch (v) {
    case GrsClass::kCrs: return "G-CRS";
    case GrsClass::kScrs: return "G-SCRS";
    case GrsClass::kIrs: return "G-IRS";
    case GrsClass::kDrs: return "G-DRS";
  }
  return "?";
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::kRightVsSigmaPlus: return "right class vs sigma_plus";
    case Violation::kLeftVsSigmaMinus: return "left class vs sigma_minus";
    case Violation::kGrsIrsNotRightIrs: return "G-IRS implies Right-IRS";
    case Violation::kGrsDrsNotLeftDrs: return "G-DRS implies Left-DRS";
    case Violation::kGrsCrsBounds: return "G-CRS implies Right-NIRS and Left-NDRS";
    case Violation::kGrsScrsBounds: return "G-SCRS implies Right-IRS and Left-DRS";
  }
  return "?";
}

template <Scalar T>
RightRts right_rts(const RatioTable<T>& table, const Tolerance& tol) {
  const T one(1);
  bool all_drs = true;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const T& a = table.alpha[j];
    const T& b = table.beta[j];
    const bool grows = greater(b, one, tol);
    if (grows && less(a, b, tol)) return RightRts::kIrs;
    if (grows && !less(b, a, tol)) all_drs = false;
  }
  return all_drs ? RightRts::kDrs : RightRts::kCrs;
}

template <Scalar T>
LeftRts left_rts(const RatioTable<T>& table, const Tolerance& tol) {
  const T one(1);
  bool all_irs = true;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const T& a = table.alpha[j];
    const T& b = table.beta[j];
    const bool shrinks = less(a, one, tol);
    if (shrinks && less(a, b, tol)) return LeftRts::kDrs;
    if (shrinks && !less(b, a, tol)) all_irs = false;
  }
  return all_irs ? LeftRts::kIrs : LeftRts::kCrs;
}

template <Scalar T>
RightRts right_rts(const BasicDataset<T>& d, std::size_t o, const Tolerance& tol) {
  require_efficient(d, o);
  return right_rts(ratio_table(d, o), tol);
}

template <Scalar T>
LeftRts left_rts(const BasicDataset<T>& d, std::size_t o, const Tolerance& tol) {
  require_efficient(d, o);
  return left_rts(ratio_table(d, o), tol);
}

template <Scalar T>
RightRts right_rts_from_sigma(const T& sigma_plus, const Tolerance& tol) {
  const auto c = compare(sigma_plus, T(1), tol);
  if (c > 0) return RightRts::kIrs;
  if (c < 0) return RightRts::kDrs;
  return RightRts::kCrs;
}

template <Scalar T>
LeftRts left_rts_from_sigma(const Extended<T>& sigma_minus, const Tolerance& tol) {
  const auto c = sigma_minus.compare_to(T(1), tol);
  if (c > 0) return LeftRts::kIrs;
  if (c < 0) return LeftRts::kDrs;
  return LeftRts::kCrs;
}

template <Scalar T>
GrsClass grs(const EfficiencyScores<T>& scores, const Tolerance& tol) {
  const T& c = scores.input(Delta::kCrs).value;
  const T& ni = scores.input(Delta::kNirs).value;
  const T& nd = scores.input(Delta::kNdrs).value;
  const bool c_eq_ni = equal(c, ni, tol);
  const bool c_eq_nd = equal(c, nd, tol);
  if (c_eq_ni && c_eq_nd) {
    if (equal(c, T(1), tol)) return GrsClass::kCrs;
    if (less(c, T(1), tol)) return GrsClass::kScrs;
  } else if (c_eq_ni && greater(nd, c, tol)) {
    return GrsClass::kIrs;
  } else if (c_eq_nd && greater(ni, c, tol)) {
    return GrsClass::kDrs;
  }
  throw Error(ErrorCode::kUnclassifiable,
              "scores crs=" + to_string(c) + " nirs=" + to_string(ni) + " ndrs=" +
                  to_string(nd) + " match no global returns-to-scale pattern");
}

template <Scalar T>
GrsClass grs(const BasicDataset<T>& d, std::size_t o, const Tolerance& tol) {
  require_efficient(d, o);
  return grs(all_scores(d, o), tol);
}

template <Scalar T>
UnitAssessment<T> classify_unit(const BasicDataset<T>& d, std::size_t o, const Tolerance& tol) {
  d.check_index(o);
  const RatioTable<T> table = ratio_table(d, o);
  EfficiencyScores<T> scores = all_scores(table);
  if (auto dominator = dominating_unit(d, Delta::kVrs, o)) {
    return InefficientUnit<T>{o, std::move(scores), *dominator};
  }
  RtsReport<T> report{o,
                      {right_rts(table, tol), left_rts(table, tol)},
                      grs(scores, tol),
                      scale_ratios(table, tol),
                      equal(scores.input(Delta::kCrs).value, T(1), tol),
                      std::move(scores)};
  return report;
}

template <Scalar T>
std::vector<UnitAssessment<T>> classify_all(const BasicDataset<T>& d, const Tolerance& tol) {
  std::vector<UnitAssessment<T>> out;
  out.reserve(d.size());
  for (std::size_t o = 0; o < d.size(); ++o) out.push_back(classify_unit(d, o, tol));
  return out;
}

template <Scalar T>
std::vector<Violation> check_consistency(const RtsReport<T>& report, const Tolerance& tol) {
  std::vector<Violation> out;
  const RightRts right = report.one_sided.right;
  const LeftRts left = report.one_sided.left;
  const auto plus = compare(report.sigma.sigma_plus, T(1), tol);
  const auto minus = report.sigma.sigma_minus.compare_to(T(1), tol);

  if (right_rts_from_sigma(report.sigma.sigma_plus, tol) != right) {
    out.push_back(Violation::kRightVsSigmaPlus);
  }
  if (left_rts_from_sigma(report.sigma.sigma_minus, tol) != left) {
    out.push_back(Violation::kLeftVsSigmaMinus);
  }
  switch (report.grs) {
    case GrsClass::kIrs:
      if (right != RightRts::kIrs || !(plus > 0)) out.push_back(Violation::kGrsIrsNotRightIrs);
      break;
    case GrsClass::kDrs:
      if (left != LeftRts::kDrs || !(minus < 0)) out.push_back(Violation::kGrsDrsNotLeftDrs);
      break;
    case GrsClass::kCrs:
      if (right == RightRts::kIrs || left == LeftRts::kDrs || plus > 0 || minus < 0) {
        out.push_back(Violation::kGrsCrsBounds);
      }
      break;
    case GrsClass::kScrs:
      if (right != RightRts::kIrs || left != LeftRts::kDrs || !(plus > 0) || !(minus < 0)) {
        out.push_back(Violation::kGrsScrsBounds);
      }
      break;
  }
  return out;
}

#define FDH_INSTANTIATE(T)                                                                  \
  template RightRts right_rts<T>(const RatioTable<T>&, const Tolerance&);                   \
  template LeftRts left_rts<T>(const RatioTable<T>&, const Tolerance&);                     \
  template RightRts right_rts<T>(const BasicDataset<T>&, std::size_t, const Tolerance&);    \
  template LeftRts left_rts<T>(const BasicDataset<T>&, std::size_t, const Tolerance&);      \
  template RightRts right_rts_from_sigma<T>(const T&, const Tolerance&);                    \
  template LeftRts left_rts_from_sigma<T>(const Extended<T>&, const Tolerance&);            \
  template GrsClass grs<T>(const EfficiencyScores<T>&, const Tolerance&);                   \
  template GrsClass grs<T>(const BasicDataset<T>&, std::size_t, const Tolerance&);          \
  template UnitAssessment<T> classify_unit<T>(const BasicDataset<T>&, std::size_t,          \
                                              const Tolerance&);                            \
  template std::vector<UnitAssessment<T>> classify_all<T>(const BasicDataset<T>&,           \
                                                          const Tolerance&);                \
  template std::vector<Violation> check_consistency<T>(const RtsReport<T>&, const Tolerance&);

FDH_INSTANTIATE(double)
FDH_INSTANTIATE(Rational)
#undef FDH_INSTANTIATE

}  // namespace fdh
