#include "framelet/errors.hpp"

namespace framelet {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_square: return "NotSquare";
    case errc::not_expansive: return "NotExpansive";
    case errc::zero_determinant: return "ZeroDeterminant";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::non_convergent: return "NonConvergent";
    case errc::depth_too_small: return "DepthTooSmall";
    case errc::grid_not_coset_compatible: return "GridNotCosetCompatible";
    case errc::missing_weight: return "MissingS";
    case errc::missing_filters: return "MissingFilters";
    case errc::negative_weight: return "NegativeS";
    case errc::sub_qmf_violated: return "SubQMFViolated";
    case errc::orbit_not_on_grid: return "OrbitNotOnGrid";
    case errc::q_in_dilated_lattice: return "QInDilatedLattice";
    case errc::quadrature_budget: return "QuadratureBudget";
    case errc::empty_after_mask: return "EmptyAfterMask";
    case errc::truncation_dominates: return "TruncationDominates";
    case errc::probe_budget_exceeded: return "ProbeBudgetExceeded";
    case errc::divergent: return "Divergent";
    case errc::bad_test_function: return "BadTestFunction";
    case errc::eval_off_grid: return "EvalOffGrid";
    case errc::overflow: return "Overflow";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace framelet
