#ifndef FREEVL_FOURIER_MOTZKIN_HPP
#define FREEVL_FOURIER_MOTZKIN_HPP

#include <cstddef>
#include <vector>

#include "freevl/vector.hpp"

namespace freevl {

inline constexpr std::size_t kFmDefaultRowCap = 100000;

/// Decides whether some x satisfies <v, x> > 0 for every v, by strict
/// Fourier-Motzkin elimination. Deliberately shares no machinery with
/// lp_solve so the two can cross-check each other; intended for small
/// systems (dim <= 4, at most a handful of vectors).
///
/// Throws ResourceLimitError when an intermediate system would exceed
/// max_rows rows.
bool fm_decide_strict(const std::vector<Vector>& vectors,
                      std::size_t max_rows = kFmDefaultRowCap);

}  // namespace freevl

#endif  // FREEVL_FOURIER_MOTZKIN_HPP
