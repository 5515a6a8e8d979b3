#include "framelet/report.hpp"

#include <algorithm>

namespace framelet {

void ResidualAccumulator::add(const RealVec& t, double residual) {
  max_ = std::max(max_, residual);
  sum_ += residual;
  ++count_;
  if (worst_.size() < keep_ || residual > worst_.back().residual) {
    worst_.push_back(WorstPoint{t, residual});
    std::sort(worst_.begin(), worst_.end(),
              [](const WorstPoint& a, const WorstPoint& b) { return a.residual > b.residual; });
    if (worst_.size() > keep_) worst_.pop_back();
  }
}

void ResidualAccumulator::finish(VerificationReport& report, double tolerance) const {
  report.max_residual = max_;
  report.mean_residual = count_ ? sum_ / static_cast<double>(count_) : 0.0;
  report.worst_points = worst_;
  report.tolerance = tolerance;
  report.pass = max_ <= tolerance;
}

}  // namespace framelet
