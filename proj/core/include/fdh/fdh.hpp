// Umbrella header.
#ifndef FDH_FDH_HPP_
#define FDH_FDH_HPP_

#include "fdh/csv.hpp"
#include "fdh/efficiency.hpp"
#include "fdh/error.hpp"
#include "fdh/model.hpp"
#include "fdh/numeric.hpp"
#include "fdh/oracle.hpp"
#include "fdh/report.hpp"
#include "fdh/response.hpp"
#include "fdh/rts.hpp"
#include "fdh/scale.hpp"
#include "fdh/technology.hpp"
#include "fdh/verify.hpp"

#endif  // FDH_FDH_HPP_
