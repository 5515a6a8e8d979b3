#pragma once

#include <stdexcept>
#include <string>

namespace framelet {

// Failure modes surfaced by the library. Every throw carries a stable
// code so callers (and the CLI exit-status mapping) can dispatch without
// parsing messages.
enum class errc {
  not_square,
  not_expansive,
  zero_determinant,
  dimension_mismatch,
  non_convergent,
  depth_too_small,
  grid_not_coset_compatible,
  missing_weight,
  missing_filters,
  negative_weight,
  sub_qmf_violated,
  orbit_not_on_grid,
  q_in_dilated_lattice,
  quadrature_budget,
  empty_after_mask,
  truncation_dominates,
  probe_budget_exceeded,
  divergent,
  bad_test_function,
  eval_off_grid,
  overflow,
  parse_error,
  internal,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace framelet
