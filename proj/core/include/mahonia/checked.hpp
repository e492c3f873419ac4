#ifndef MAHONIA_CHECKED_HPP
#define MAHONIA_CHECKED_HPP

#include <cstdint>
#include <stdexcept>

namespace mahonia {

/// Exact coefficient type for generating polynomials.  Desk-scale counts fit
/// comfortably in 64 bits; any overflow is a hard error, never a wraparound.
using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
    Coeff r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("coefficient addition overflow");
    return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("coefficient multiplication overflow");
    return r;
}

} // namespace mahonia

#endif
