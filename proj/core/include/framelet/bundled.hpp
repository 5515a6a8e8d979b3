#pragma once

#include "framelet/bank_format.hpp"

namespace framelet {

/// Dyadic Haar bank: H0 = (1+e^{-2πit})/2, H1 = (1-e^{-2πit})/2.
BankFile bundled_haar();
/// Centered linear-spline framelet with three generators
/// (|H0| = cos²πt, |H1| = √2 sinπt cosπt, |H2| = sin²πt).
BankFile bundled_linear_spline();
/// Shannon-type profile φ̂ = χ_[-1/4,1/4]; no polynomial mask, used by
/// the frame-bound and density subcommands.
BankFile bundled_shannon_fmra();
/// Quincunx dilation [[1,1],[1,-1]] with the two-dimensional Haar pair.
BankFile bundled_quincunx_haar();

std::vector<BankFile> bundled_banks();

/// Weighted bank over the Haar profile that exercises the full oblique
/// pipeline: S = (2+cos2πt)/3, reduced mask Q0 = sqrt(S(2t)/S(t)) H0
/// completed on the grid, high passes lifted back by sqrt(S).
BankFile build_haar_oep_bank(GridSpec grid);

}  // namespace framelet
