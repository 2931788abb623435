#pragma once

// Scalar kernels of the Tucker exchange. Both the full pivot and the
// O(m+n) infeasibility-index prediction evaluate updated entries through
// these functions, so their results agree bit for bit.

namespace spdspds::detail {

/// Entry of the pivot row (or beta_I) after scaling: a_Ij / a_IJ.
inline double scaled_pivot_row(double a_Ij, double pivot) { return a_Ij / pivot; }

/// Entry of the pivot column (or gamma_J) after the exchange: -a_iJ / a_IJ.
inline double scaled_pivot_col(double a_iJ, double pivot) { return -a_iJ / pivot; }

/// Every other entry: a_ij - a_iJ * (a_Ij / a_IJ).
inline double eliminated(double a_ij, double a_iJ, double scaled_Ij) { return a_ij - a_iJ * scaled_Ij; }

}  // namespace spdspds::detail
