#include "mahonia/poly.hpp"

#include <stdexcept>

namespace mahonia {

QPoly QPoly::monomial(int exp, Coeff coeff) {
    QPoly p;
    p.add_term(exp, coeff);
    return p;
}

int QPoly::degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first;
}

Coeff QPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

void QPoly::add_term(int exp, Coeff coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    for (const auto& [exp, c] : rhs.terms_) add_term(exp, c);
    return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
    QPoly out;
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_)
            out.add_term(ea + eb, checked_mul(ca, cb));
    return out;
}

QPoly QPoly::divide_exact(const QPoly& numerator, const QPoly& denominator) {
    if (denominator.is_zero()) throw std::logic_error("polynomial division by zero");
    QPoly rem = numerator;
    QPoly quot;
    const int dd = denominator.degree();
    const Coeff dl = denominator.terms_.rbegin()->second;
    while (!rem.is_zero() && rem.degree() >= dd) {
        const Coeff rl = rem.terms_.rbegin()->second;
        if (rl % dl != 0)
            throw std::logic_error("polynomial division left a non-integer quotient step");
        const int shift = rem.degree() - dd;
        const Coeff factor = rl / dl;
        for (const auto& [exp, c] : denominator.terms_)
            rem.add_term(exp + shift, checked_mul(-c, factor));
        quot.add_term(shift, factor);
    }
    if (!rem.is_zero())
        throw std::logic_error("polynomial division left a remainder");
    return quot;
}

Coeff QPoly::eval_one() const {
    Coeff sum = 0;
    for (const auto& [exp, c] : terms_) sum = checked_add(sum, c);
    return sum;
}

namespace {

std::string q_term(int exp, Coeff coeff) {
    std::string out;
    if (exp == 0) return std::to_string(coeff);
    if (coeff != 1) out += std::to_string(coeff) + "*";
    out += (exp == 1) ? "q" : "q^" + std::to_string(exp);
    return out;
}

} // namespace

std::string QPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [exp, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += q_term(exp, c);
    }
    return out;
}

Coeff BivarPoly::coeff(int t_exp, int q_exp) const {
    auto it = terms_.find({t_exp, q_exp});
    return it == terms_.end() ? 0 : it->second;
}

void BivarPoly::add_term(int t_exp, int q_exp, Coeff coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace({t_exp, q_exp}, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
    return *this;
}

QPoly BivarPoly::at_t_one() const {
    QPoly out;
    for (const auto& [key, c] : terms_) out.add_term(key.second, c);
    return out;
}

Coeff BivarPoly::total() const {
    Coeff sum = 0;
    for (const auto& [key, c] : terms_) sum = checked_add(sum, c);
    return sum;
}

std::string BivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    auto it = terms_.begin();
    while (it != terms_.end()) {
        const int t_exp = it->first.first;
        // collect the q-group for this t exponent
        std::string group;
        int pieces = 0;
        for (; it != terms_.end() && it->first.first == t_exp; ++it) {
            if (pieces) group += " + ";
            group += q_term(it->first.second, it->second);
            ++pieces;
        }
        std::string term;
        if (t_exp == 0) {
            term = (pieces == 1) ? group : "(" + group + ")";
        } else {
            term = (t_exp == 1) ? "t" : "t^" + std::to_string(t_exp);
            if (pieces > 1) {
                term += "*(" + group + ")";
            } else if (group != "1") {
                term += "*" + group;
            }
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

} // namespace mahonia
