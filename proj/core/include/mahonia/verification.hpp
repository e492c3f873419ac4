#ifndef MAHONIA_VERIFICATION_HPP
#define MAHONIA_VERIFICATION_HPP

#include <string>

#include "mahonia/enumeration.hpp"
#include "mahonia/multiset.hpp"

namespace mahonia {

/// Outcome of one exhaustive desk-scale check.  A failing report carries a
/// reproducible first counterexample; the sweep order is fixed, so re-running
/// yields the same counterexample.
struct Report {
    std::string claim;
    std::string params;
    long long instances = 0;
    bool pass = true;
    std::string counterexample;
    double elapsed_ms = 0.0;
};

/// den-r-h: the joint distributions of (gdes_l, gmaj_l) and (gexc_l, gden_h)
/// over S_M coincide for every 1 <= h <= g+l.  The hypothesis h <= g+l is
/// rejected before enumeration.
Report check_den_r_h(const Multiset& m, int g, int level, int h, int threads = 1);

/// regular: over the uniform multiset {1^k,...,n^k}, (gexc_l, gden_h) has
/// the same joint distribution as (rdes, rmaj) where r = g+l-1 and the
/// r-statistics are gdes/gmaj at gap r, level 1.
Report check_regular(int n, int k, int g, int level, int h, int threads = 1);

/// mahonian: sum of q^{gden_h} over S_M equals the q-multinomial of the
/// multiplicities and equals the distribution of inv.
Report check_mahonian(const Multiset& m, int g, int h, int threads = 1);

/// bij-den: phi_den is a bijection S_{M'} x P(k_n, m') -> S_M with
/// gden_h(output) = gden_h(w) + |lambda|, weakly decreasing insertion
/// indices along traces, and the inverse recovering every input.  When
/// additionally 1 <= h <= g+level and n >= g+level, the sandwich
/// lambda_{t-s} >= t + delta_l + gamma_g >= lambda_{t-s+1} is checked with
/// lambda_0 = +inf and lambda_{k_n+1} = 0, where s and t are the gexc_l
/// values of input and output.
Report check_bijection_den(const Multiset& m, int g, int h, int level);

/// bij-maj: same battery for phi_maj, with gmaj additivity and the gdes_l
/// sandwich.
Report check_bijection_maj(const Multiset& m, int g, int level);

/// phi-psi: for every word over n_prime and every label c whose gap has no
/// n to its left: psi(phi(w, c)) = (w, c); the excedance-place and gden
/// increment laws of phi; and for each l with h <= g+l <= n, the gexc law
/// (gexc_l grows by one exactly when c > gexc_l(w) + delta_l + gamma_g).
Report check_phi_psi(const Multiset& n_prime, int n, int g, int h);

/// equi: the two joint distributions over S_M are equal as polynomials.
Report check_equidistribution(const Multiset& m,
                              const std::pair<StatSpec, StatSpec>& pair_a,
                              const std::pair<StatSpec, StatSpec>& pair_b,
                              int threads = 1);

} // namespace mahonia

#endif
