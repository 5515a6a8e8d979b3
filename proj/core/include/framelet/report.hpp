#pragma once

#include <string>
#include <vector>

#include "framelet/filter.hpp"

namespace framelet {

struct WorstPoint {
  RealVec t;
  double residual = 0.0;
};

/// Per-condition residual statistics over a sampling grid.
struct VerificationReport {
  std::string condition_id;  // UEP0 | UEPk | SOEP0 | SOEPk | ORTHO | CALDERON | CROSS | ...
  GridSpec grid;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  std::vector<WorstPoint> worst_points;
  double masked_fraction = 0.0;  // grid fraction excluded by the zero-set mask
  double tolerance = 0.0;
  bool pass = false;
};

/// Accumulates residuals and keeps the few worst offenders.
class ResidualAccumulator {
 public:
  explicit ResidualAccumulator(std::size_t keep_worst = 3) : keep_(keep_worst) {}

  void add(const RealVec& t, double residual);
  void finish(VerificationReport& report, double tolerance) const;
  double max() const { return max_; }

 private:
  std::size_t keep_;
  double max_ = 0.0;
  double sum_ = 0.0;
  std::size_t count_ = 0;
  std::vector<WorstPoint> worst_;
};

}  // namespace framelet
