#ifndef MAHONIA_PARAMS_HPP
#define MAHONIA_PARAMS_HPP

#include "mahonia/errors.hpp"

namespace mahonia {

/// Gap/level parameters for the refined statistics.  g is the gap, level is
/// the floor used by the descent/excedance side, h the floor used by the
/// Denert side.  All must be >= 1; the tighter hypothesis 1 <= h <= g+level
/// is enforced by the checkers that rely on it, not here.
struct StatParams {
    int g = 1;
    int level = 1;
    int h = 1;

    void validate() const {
        if (g < 1 || level < 1 || h < 1)
            throw precondition_error("statistic parameters must be >= 1");
    }
};

} // namespace mahonia

#endif
