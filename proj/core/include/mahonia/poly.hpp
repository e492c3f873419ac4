#ifndef MAHONIA_POLY_HPP
#define MAHONIA_POLY_HPP

#include <map>
#include <string>
#include <utility>

#include "mahonia/checked.hpp"

namespace mahonia {

/// Exact-integer polynomial in q.  No zero coefficients are stored.
class QPoly {
public:
    QPoly() = default;

    static QPoly zero() { return QPoly{}; }
    static QPoly one() { return monomial(0, 1); }
    static QPoly monomial(int exp, Coeff coeff);

    bool is_zero() const { return terms_.empty(); }
    int degree() const; // -1 for the zero polynomial
    Coeff coeff(int exp) const;
    const std::map<int, Coeff>& terms() const { return terms_; }

    void add_term(int exp, Coeff coeff);

    QPoly& operator+=(const QPoly& rhs);
    friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
    friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);

    /// Exact division; the remainder must vanish.  A nonzero remainder or a
    /// non-integer quotient step is an internal error (std::logic_error).
    static QPoly divide_exact(const QPoly& numerator, const QPoly& denominator);

    /// Value at q = 1 (the number of objects enumerated), overflow-checked.
    Coeff eval_one() const;

    /// "1 + q + 2*q^2 + q^4" in ascending exponent order; "0" when zero.
    std::string to_string() const;

    bool operator==(const QPoly&) const = default;

private:
    std::map<int, Coeff> terms_;
};

/// Exact-integer bivariate polynomial in the markers t and q, the carrier
/// for joint statistic distributions.  No zero coefficients are stored.
class BivarPoly {
public:
    BivarPoly() = default;

    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(int t_exp, int q_exp) const;
    const std::map<std::pair<int, int>, Coeff>& terms() const { return terms_; }

    void add_term(int t_exp, int q_exp, Coeff coeff);

    BivarPoly& operator+=(const BivarPoly& rhs);
    friend BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs) { return lhs += rhs; }

    /// Collapse at t = 1, leaving the q-distribution.
    QPoly at_t_one() const;

    /// Value at t = q = 1 (the number of objects enumerated).
    Coeff total() const;

    /// Expanded t-grouped form: "(1 + 2*q) + t*(q^2 + q^3) + t^2*q^6",
    /// "1 + t*q", "0".
    std::string to_string() const;

    bool operator==(const BivarPoly&) const = default;

private:
    std::map<std::pair<int, int>, Coeff> terms_;
};

} // namespace mahonia

#endif
