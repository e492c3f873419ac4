#include "mahonia/verification.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "mahonia/bijections.hpp"
#include "mahonia/errors.hpp"
#include "mahonia/labeling.hpp"
#include "mahonia/qseries.hpp"
#include "mahonia/stats.hpp"

namespace mahonia {

namespace {

class Timer {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

StatSpec make_spec(StatSpec::Kind kind, int g, int level) {
    StatSpec spec;
    spec.kind = kind;
    spec.g = g;
    spec.level = level;
    spec.spelling = spec.name() + ":g=" + std::to_string(g) +
                    (kind == StatSpec::Kind::gden ? ":h=" : ":l=") + std::to_string(level);
    return spec;
}

Report equidistribution_core(std::string claim, std::string params, const Multiset& m,
                             const std::pair<StatSpec, StatSpec>& pair_a,
                             const std::pair<StatSpec, StatSpec>& pair_b, int threads) {
    Timer timer;
    Report report;
    report.claim = std::move(claim);
    report.params = std::move(params);
    const std::vector<BivarPoly> dists = joint_dists(m, {pair_a, pair_b}, threads);
    report.instances = m.word_count();
    report.pass = dists[0] == dists[1];
    if (!report.pass) {
        report.counterexample = "(" + pair_a.first.spelling + ", " + pair_a.second.spelling +
                                ") gives " + dists[0].to_string() + " but (" +
                                pair_b.first.spelling + ", " + pair_b.second.spelling +
                                ") gives " + dists[1].to_string();
    }
    report.elapsed_ms = timer.ms();
    return report;
}

// The den-side insertion hypotheses, with the degenerate single-letter case
// admitted (see bijections.cpp).
void require_den(int n, int g, int h) {
    if (!(n == 1 && g == 1) && n < std::max(g + 1, h))
        throw precondition_error("requires n >= max(g+1, h)");
}

void require_maj(int n, int g, int level) {
    if (!(n == 1 && g == 1 && level == 1) && n < g + level)
        throw precondition_error("requires n >= g + level");
}

} // namespace

Report check_den_r_h(const Multiset& m, int g, int level, int h, int threads) {
    if (g < 1 || level < 1 || h < 1) throw precondition_error("parameters must be >= 1");
    if (h > g + level) throw precondition_error("den-r-h requires 1 <= h <= g + l");
    return equidistribution_core(
        "den-r-h",
        "M=" + m.to_string() + " g=" + std::to_string(g) + " l=" + std::to_string(level) +
            " h=" + std::to_string(h),
        m, {make_spec(StatSpec::Kind::gdes, g, level), make_spec(StatSpec::Kind::gmaj, g, level)},
        {make_spec(StatSpec::Kind::gexc, g, level), make_spec(StatSpec::Kind::gden, g, h)},
        threads);
}

Report check_regular(int n, int k, int g, int level, int h, int threads) {
    if (n < 1 || k < 1) throw precondition_error("regular requires n >= 1 and k >= 1");
    if (g < 1 || level < 1 || h < 1) throw precondition_error("parameters must be >= 1");
    if (h > g + level) throw precondition_error("regular requires 1 <= h <= g + l");
    const int r = g + level - 1;
    const Multiset m(std::vector<int>(static_cast<size_t>(n), k));
    return equidistribution_core(
        "regular",
        "n=" + std::to_string(n) + " k=" + std::to_string(k) + " g=" + std::to_string(g) +
            " l=" + std::to_string(level) + " h=" + std::to_string(h) + " r=" + std::to_string(r),
        m, {make_spec(StatSpec::Kind::gdes, r, 1), make_spec(StatSpec::Kind::gmaj, r, 1)},
        {make_spec(StatSpec::Kind::gexc, g, level), make_spec(StatSpec::Kind::gden, g, h)},
        threads);
}

Report check_mahonian(const Multiset& m, int g, int h, int threads) {
    (void)threads; // desk-scale single pass
    if (g < 1 || h < 1) throw precondition_error("parameters must be >= 1");
    Timer timer;
    Report report;
    report.claim = "mahonian";
    report.params = "M=" + m.to_string() + " g=" + std::to_string(g) + " h=" + std::to_string(h);

    QPoly den_dist, inv_dist;
    for_each_word(m, [&](const Word& w) {
        den_dist.add_term(static_cast<int>(gden(w, g, h)), 1);
        inv_dist.add_term(static_cast<int>(inv_imv(w).inv), 1);
    });
    const QPoly expected = q_multinomial(m.multiplicities());
    report.instances = m.word_count();
    report.pass = den_dist == expected && inv_dist == expected;
    if (!report.pass) {
        report.counterexample = "gden gives " + den_dist.to_string() + ", inv gives " +
                                inv_dist.to_string() + ", q-multinomial is " +
                                expected.to_string();
    }
    report.elapsed_ms = timer.ms();
    return report;
}

namespace {

// lambda_{i} with the conventions lambda_0 = +inf and lambda_{s+1} = 0
bool sandwich_holds(const std::vector<int>& parts, int diff, long long bound) {
    if (diff < 0 || diff > static_cast<int>(parts.size())) return false;
    if (diff >= 1 && parts[static_cast<size_t>(diff - 1)] < bound) return false;
    if (diff < static_cast<int>(parts.size()) &&
        bound < parts[static_cast<size_t>(diff)])
        return false;
    return true;
}

std::string pair_text(const Word& w, const std::vector<int>& parts) {
    std::string lambda = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) lambda += ',';
        lambda += std::to_string(parts[i]);
    }
    lambda += ")";
    return "w=" + (w.empty() ? std::string("<empty>") : w.to_string()) + " lambda=" + lambda;
}

} // namespace

Report check_bijection_den(const Multiset& m, int g, int h, int level) {
    if (m.empty()) throw precondition_error("bij-den requires a nonempty multiset");
    if (g < 1 || h < 1 || level < 1) throw precondition_error("parameters must be >= 1");
    const int n = m.largest_letter();
    require_den(n, g, h);

    Timer timer;
    Report report;
    report.claim = "bij-den";
    report.params = "M=" + m.to_string() + " g=" + std::to_string(g) + " h=" + std::to_string(h) +
                    " l=" + std::to_string(level);

    const Multiset base = m.without_largest();
    const int k_n = m.multiplicity(n);
    const int m_prime = m.size() - k_n;
    const bool sandwich = h <= g + level && n >= g + level;
    const int kappa = sandwich ? delta(m, level) + gamma(m, g) : 0;

    std::set<Word> seen;
    bool failed = false;
    for_each_word(base, [&](const Word& w) {
        if (failed) return;
        const long long den_in = gden(w, g, h);
        const int exc_in = sandwich ? gexc(w, g, level) : 0;
        for_each_partition_in_box(k_n, m_prime, [&](const std::vector<int>& parts) {
            if (failed) return;
            ++report.instances;
            const Partition lambda(parts, k_n, m_prime);
            const MapTrace trace = phi_den(w, lambda, g, h);
            const Word& u = trace.result;

            const auto fail = [&](const std::string& why) {
                report.pass = false;
                report.counterexample = pair_text(w, parts) + ": " + why;
                failed = true;
            };

            if (u.multiset() != m) return fail("output does not realize M");
            if (gden(u, g, h) != den_in + lambda.weight())
                return fail("gden(output) != gden(w) + |lambda|");
            for (size_t b = 1; b < trace.steps.size(); ++b)
                if (trace.steps[b].chosen_index > trace.steps[b - 1].chosen_index)
                    return fail("insertion indices are not weakly decreasing");
            if (!seen.insert(u).second) return fail("output collides: " + u.to_string());

            const InverseResult back = phi_den_inverse(u, g, h);
            if (back.word != w || back.lambda != lambda)
                return fail("inverse does not recover (w, lambda)");

            if (sandwich) {
                const int exc_out = gexc(u, g, level);
                if (!sandwich_holds(parts, exc_out - exc_in,
                                    static_cast<long long>(exc_out) + kappa))
                    return fail("sandwich inequality fails (gexc " + std::to_string(exc_in) +
                                " -> " + std::to_string(exc_out) + ")");
            }
        });
    });

    if (report.pass && static_cast<Coeff>(seen.size()) != m.word_count()) {
        report.pass = false;
        report.counterexample = "image has " + std::to_string(seen.size()) + " words, |S_M| = " +
                                std::to_string(m.word_count());
    }
    report.elapsed_ms = timer.ms();
    return report;
}

Report check_bijection_maj(const Multiset& m, int g, int level) {
    if (m.empty()) throw precondition_error("bij-maj requires a nonempty multiset");
    if (g < 1 || level < 1) throw precondition_error("parameters must be >= 1");
    const int n = m.largest_letter();
    require_maj(n, g, level);

    Timer timer;
    Report report;
    report.claim = "bij-maj";
    report.params = "M=" + m.to_string() + " g=" + std::to_string(g) + " l=" + std::to_string(level);

    const Multiset base = m.without_largest();
    const int k_n = m.multiplicity(n);
    const int m_prime = m.size() - k_n;
    const bool sandwich = n >= g + level; // false only in the degenerate n = 1 case
    const int kappa = sandwich ? delta(m, level) + gamma(m, g) : 0;

    std::set<Word> seen;
    bool failed = false;
    for_each_word(base, [&](const Word& w) {
        if (failed) return;
        const long long maj_in = gmaj_value(w, g, level);
        const int des_in = gdes_count(w, g, level);
        for_each_partition_in_box(k_n, m_prime, [&](const std::vector<int>& parts) {
            if (failed) return;
            ++report.instances;
            const Partition lambda(parts, k_n, m_prime);
            const MapTrace trace = phi_maj(w, lambda, g, level);
            const Word& u = trace.result;

            const auto fail = [&](const std::string& why) {
                report.pass = false;
                report.counterexample = pair_text(w, parts) + ": " + why;
                failed = true;
            };

            if (u.multiset() != m) return fail("output does not realize M");
            if (gmaj_value(u, g, level) != maj_in + lambda.weight())
                return fail("gmaj(output) != gmaj(w) + |lambda|");
            for (size_t b = 1; b < trace.steps.size(); ++b)
                if (trace.steps[b].chosen_index > trace.steps[b - 1].chosen_index)
                    return fail("insertion indices are not weakly decreasing");
            if (!seen.insert(u).second) return fail("output collides: " + u.to_string());

            const InverseResult back = phi_maj_inverse(u, g, level);
            if (back.word != w || back.lambda != lambda)
                return fail("inverse does not recover (w, lambda)");

            if (sandwich) {
                const int des_out = gdes_count(u, g, level);
                if (!sandwich_holds(parts, des_out - des_in,
                                    static_cast<long long>(des_out) + kappa))
                    return fail("sandwich inequality fails (gdes " + std::to_string(des_in) +
                                " -> " + std::to_string(des_out) + ")");
            }
        });
    });

    if (report.pass && static_cast<Coeff>(seen.size()) != m.word_count()) {
        report.pass = false;
        report.counterexample = "image has " + std::to_string(seen.size()) + " words, |S_M| = " +
                                std::to_string(m.word_count());
    }
    report.elapsed_ms = timer.ms();
    return report;
}

Report check_phi_psi(const Multiset& n_prime, int n, int g, int h) {
    if (g < 1 || h < 1) throw precondition_error("parameters must be >= 1");
    if (n < 1 || n_prime.largest_letter() > n)
        throw precondition_error("phi-psi: multiset letters must not exceed n");
    require_den(n, g, h);

    Timer timer;
    Report report;
    report.claim = "phi-psi";
    report.params = "N'=" + (n_prime.empty() ? std::string("{}") : n_prime.to_string()) +
                    " n=" + std::to_string(n) + " g=" + std::to_string(g) +
                    " h=" + std::to_string(h);

    const int m_prime = n_prime.size() - n_prime.multiplicity(n);
    bool failed = false;
    for_each_word(n_prime, [&](const Word& w) {
        if (failed) return;
        const LabeledSpaces labeling = gden_labeling(w, n, g, h);
        const Excedances exc_w = excedance_places(w, g, h);
        const int s = static_cast<int>(exc_w.places.size());
        int gam = 0;
        for (int v : w.letters())
            if (v >= n - g + 1 && v <= n - 1) ++gam;
        const long long den_w = gden(w, g, h);

        for (int c = 0; c <= m_prime; ++c) {
            const int y = (c == 0) ? m_prime + 1 : labeling.gap_of_label(c) + 1;
            // the phi laws are stated for labels with no n left of the gap
            bool n_on_left = false;
            for (int i = 1; i < y && i <= w.size(); ++i)
                if (w.at(i) == n) n_on_left = true;
            if (n_on_left) continue;

            ++report.instances;
            const Word u = phi(w, c, n, g, h);

            const auto fail = [&](const std::string& why) {
                report.pass = false;
                report.counterexample =
                    "w=" + (w.empty() ? std::string("<empty>") : w.to_string()) +
                    " c=" + std::to_string(c) + ": " + why;
                failed = true;
            };

            // excedance-place law
            std::vector<int> expected_places = exc_w.places;
            if (c > s + gam) {
                expected_places.insert(
                    std::lower_bound(expected_places.begin(), expected_places.end(), y), y);
            }
            if (excedance_places(u, g, h).places != expected_places)
                return fail("excedance places do not follow the insertion law");

            if (gden(u, g, h) != den_w + c) return fail("gden(phi(w,c)) != gden(w) + c");

            const PsiResult back = psi(u, n, g, h);
            if (back.word != w || back.label != c) return fail("psi does not invert phi");

            // gexc growth law, for every level compatible with h <= g+l <= n
            for (int level = std::max(1, h - g); g + level <= n; ++level) {
                int del = 0;
                for (int v : w.letters())
                    if (v < level) ++del;
                const int before = gexc(w, g, level);
                const int after = gexc(u, g, level);
                const int expected = (c <= before + del + gam) ? before : before + 1;
                if (after != expected)
                    return fail("gexc law fails at l=" + std::to_string(level));
            }
        }
    });
    report.elapsed_ms = timer.ms();
    return report;
}

Report check_equidistribution(const Multiset& m, const std::pair<StatSpec, StatSpec>& pair_a,
                              const std::pair<StatSpec, StatSpec>& pair_b, int threads) {
    return equidistribution_core("equi",
                                 "M=" + m.to_string() + " a=(" + pair_a.first.spelling + "," +
                                     pair_a.second.spelling + ") b=(" + pair_b.first.spelling +
                                     "," + pair_b.second.spelling + ")",
                                 m, pair_a, pair_b, threads);
}

} // namespace mahonia
