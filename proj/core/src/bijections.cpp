#include "mahonia/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "mahonia/errors.hpp"
#include "mahonia/labeling.hpp"
#include "mahonia/stats.hpp"

namespace mahonia {

namespace {

// The insertion maps are defined for n >= max(g+1, h) (den side) and
// n >= g+level (maj side).  The single-letter case n = 1, g = 1 degenerates
// gracefully (the only label is 0 and the maps append/remove an n), and the
// bijection checkers rely on it, so it is admitted explicitly.
void require_den_hypotheses(int n, int g, int h) {
    if (g < 1 || h < 1) throw precondition_error("gap and level parameters must be >= 1");
    if (n == 1 && g == 1) return;
    if (n < std::max(g + 1, h))
        throw precondition_error("den-side insertion requires n >= max(g+1, h)");
}

void require_maj_hypotheses(int n, int g, int level) {
    if (g < 1 || level < 1) throw precondition_error("gap and level parameters must be >= 1");
    if (n == 1 && g == 1 && level == 1) return;
    if (n < g + level)
        throw precondition_error("maj-side insertion requires n >= g + level");
}

} // namespace

Word phi(const Word& w, int c, int n, int g, int h) {
    require_den_hypotheses(n, g, h);
    const int len = w.size();
    const int m_prime = len - w.count(n);
    if (c < 0 || c > m_prime)
        throw precondition_error("phi: label must lie in [0, m']");

    if (c == 0) {
        std::vector<int> out = w.letters();
        out.insert(out.begin() + m_prime, n); // immediately after alpha_{m'}
        return Word(std::move(out));
    }

    const LabeledSpaces labeling = gden_labeling(w, n, g, h);
    const int y = labeling.gap_of_label(c) + 1; // label c marks the space before alpha_y

    const Excedances e = excedance_places(w, g, h);
    const Word sorted = w.sorted();
    std::vector<int> out = w.letters();
    out.push_back(0); // slot m'+a, filled by the chain shift below

    if (std::binary_search(e.places.begin(), e.places.end(), y)) {
        // excedance places weakly right of y form the shift chain
        std::vector<int> chain;
        for (int i : e.places)
            if (i >= y) chain.push_back(i);
        // smallest k with alpha_{i_k} < x_{i_{k+1}} + g, where x_{i_{a+1}} = n
        int k = static_cast<int>(chain.size());
        for (int z = 1; z <= static_cast<int>(chain.size()); ++z) {
            const int next_x =
                (z == static_cast<int>(chain.size())) ? n : sorted.at(chain[static_cast<size_t>(z)]);
            if (w.at(chain[static_cast<size_t>(z - 1)]) < next_x + g) {
                k = z;
                break;
            }
        }
        const int displaced = w.at(chain[static_cast<size_t>(k - 1)]); // alpha_{i_k}
        int p = 0; // smallest index with x_p = displaced - g + 1
        for (int j = 1; j <= len; ++j) {
            if (sorted.at(j) == displaced - g + 1) {
                p = j;
                break;
            }
        }
        if (p == 0) throw std::logic_error("phi: sorted word has no letter alpha_{i_k} - g + 1");

        out[static_cast<size_t>(y - 1)] = n;
        for (int z = 2; z <= k; ++z)
            out[static_cast<size_t>(chain[static_cast<size_t>(z - 1)] - 1)] =
                w.at(chain[static_cast<size_t>(z - 2)]);

        // displaced letter enters the non-excedance chain starting weakly right of p
        int carry = displaced;
        for (int j : e.non_places) {
            if (j < p) continue;
            out[static_cast<size_t>(j - 1)] = carry;
            carry = w.at(j);
        }
        out[static_cast<size_t>(len)] = carry;
    } else {
        out[static_cast<size_t>(y - 1)] = n;
        int carry = w.at(y);
        for (int j : e.non_places) {
            if (j <= y) continue;
            out[static_cast<size_t>(j - 1)] = carry;
            carry = w.at(j);
        }
        out[static_cast<size_t>(len)] = carry;
    }
    return Word(std::move(out));
}

PsiResult psi(const Word& u, int n, int g, int h) {
    require_den_hypotheses(n, g, h);
    if (u.count(n) == 0) throw precondition_error("psi: the word contains no largest letter");

    const int len = u.size();
    const int m_prime = len - u.count(n);
    int y = 0;
    for (int i = 1; i <= len; ++i) {
        if (u.at(i) == n) {
            y = i;
            break;
        }
    }

    const long long den_before = gden(u, g, h);
    std::vector<int> out = u.letters();

    if (y == m_prime + 1) {
        out.erase(out.begin() + (y - 1));
        Word w(std::move(out));
        const int label = static_cast<int>(den_before - gden(w, g, h));
        return {std::move(w), label};
    }

    const Excedances e = excedance_places(u, g, h);
    const Word sorted = u.sorted();
    std::vector<int> nexc_chain; // non-excedance places strictly right of y
    for (int j : e.non_places)
        if (j > y) nexc_chain.push_back(j);
    const int a = static_cast<int>(nexc_chain.size()); // >= 1: the last position qualifies

    // greatest z with beta_{j_z} >= x_{j_{z-1}} + g and beta_{j_z} >= h (j_0 = y)
    int pivot = 0;
    for (int z = a; z >= 1; --z) {
        const int prev_pos = (z == 1) ? y : nexc_chain[static_cast<size_t>(z - 2)];
        const int letter = u.at(nexc_chain[static_cast<size_t>(z - 1)]);
        if (letter >= sorted.at(prev_pos) + g && letter >= h) {
            pivot = z;
            break;
        }
    }

    if (pivot == 0) {
        int dest = y;
        for (int j : nexc_chain) {
            out[static_cast<size_t>(dest - 1)] = u.at(j);
            dest = j;
        }
        if (dest != len) throw std::logic_error("psi: shift chain does not end at the last position");
        out.pop_back();
    } else {
        const int pivot_pos = nexc_chain[static_cast<size_t>(pivot - 1)];
        const int pivot_letter = u.at(pivot_pos);
        int p = 0;
        for (int j = 1; j <= len; ++j) {
            if (sorted.at(j) == pivot_letter - g + 1) {
                p = j;
                break;
            }
        }
        if (p == 0) throw std::logic_error("psi: sorted word has no letter beta_{j_pivot} - g + 1");

        // excedance chain between beta_y and beta_p, beta_y included
        std::vector<int> chain{y};
        for (int i : e.places)
            if (i > y && i < p) chain.push_back(i);

        for (size_t z = 0; z < chain.size(); ++z) {
            const int next_pos = (z + 1 < chain.size()) ? chain[z + 1] : pivot_pos;
            out[static_cast<size_t>(chain[z] - 1)] = u.at(next_pos);
        }
        for (int z = pivot; z < a; ++z)
            out[static_cast<size_t>(nexc_chain[static_cast<size_t>(z - 1)] - 1)] =
                u.at(nexc_chain[static_cast<size_t>(z)]);
        if (nexc_chain.back() != len)
            throw std::logic_error("psi: shift chain does not end at the last position");
        out.pop_back();
    }

    Word w(std::move(out));
    const int label = static_cast<int>(den_before - gden(w, g, h));
    return {std::move(w), label};
}

namespace {

struct Driver {
    int n = 0;
    int k_n = 0;
    std::vector<int> remaining; // parts of lambda not yet consumed

    Driver(const Word& w, const Partition& lambda) {
        if (lambda.box_width() != w.size())
            throw precondition_error("partition box width must equal the word length");
        if (lambda.box_height() < 1)
            throw precondition_error("partition box height must be >= 1");
        if (!w.empty()) (void)w.multiset(); // base word must use a contiguous range
        n = w.max_letter() + 1;
        k_n = lambda.box_height();
        remaining = lambda.parts();
    }

    // greatest 1-based index of T whose label is a remaining part; consumes it
    int choose(const std::vector<int>& labels, MapTrace& trace, const Word& cur) {
        int y = 0;
        for (int i = static_cast<int>(labels.size()); i >= 1; --i) {
            if (std::find(remaining.begin(), remaining.end(), labels[static_cast<size_t>(i - 1)]) !=
                remaining.end()) {
                y = i;
                break;
            }
        }
        if (y == 0) throw std::logic_error("insertion driver: no label matches a remaining part");
        const int consumed = labels[static_cast<size_t>(y - 1)];
        trace.steps.push_back({cur, labels, y, consumed, remaining});
        remaining.erase(std::find(remaining.begin(), remaining.end(), consumed));
        return y;
    }
};

} // namespace

MapTrace phi_den(const Word& w, const Partition& lambda, int g, int h) {
    Driver driver(w, lambda);
    require_den_hypotheses(driver.n, g, h);
    MapTrace trace;
    Word cur = w;
    for (int b = 0; b < driver.k_n; ++b) {
        const LabeledSpaces labeling = gden_labeling(cur, driver.n, g, h);
        const std::vector<int> labels = labeling.unstarred_labels();
        const int y = driver.choose(labels, trace, cur);
        cur = phi(cur, labels[static_cast<size_t>(y - 1)], driver.n, g, h);
    }
    trace.result = std::move(cur);
    return trace;
}

MapTrace phi_maj(const Word& w, const Partition& lambda, int g, int level) {
    Driver driver(w, lambda);
    require_maj_hypotheses(driver.n, g, level);
    MapTrace trace;
    Word cur = w;
    for (int b = 0; b < driver.k_n; ++b) {
        const GmajLabeling labeling = gmaj_labeling(cur, driver.n, g, level);
        const std::vector<int> labels = labeling.spaces.unstarred_labels();
        const int y = driver.choose(labels, trace, cur);
        const int gap = labeling.spaces.unstarred_gap(y);
        std::vector<int> letters = cur.letters();
        letters.insert(letters.begin() + gap, driver.n);
        cur = Word(std::move(letters));
    }
    trace.result = std::move(cur);
    return trace;
}

namespace {

Partition collect_lambda(std::vector<int> labels, int k_n, int m_prime) {
    std::sort(labels.begin(), labels.end(), std::greater<int>());
    return Partition(std::move(labels), k_n, m_prime);
}

} // namespace

InverseResult phi_den_inverse(const Word& u, int g, int h) {
    if (u.empty()) throw precondition_error("phi_den_inverse: empty word");
    (void)u.multiset();
    const int n = u.max_letter();
    const int k_n = u.count(n);
    const int m_prime = u.size() - k_n;
    require_den_hypotheses(n, g, h);

    InverseResult out;
    Word cur = u;
    std::vector<int> labels;
    for (int b = 0; b < k_n; ++b) {
        PsiResult step = psi(cur, n, g, h);
        out.steps.push_back({cur, step.label});
        labels.push_back(step.label);
        cur = std::move(step.word);
    }
    out.word = std::move(cur);
    out.lambda = collect_lambda(std::move(labels), k_n, m_prime);
    return out;
}

InverseResult phi_maj_inverse(const Word& u, int g, int level) {
    if (u.empty()) throw precondition_error("phi_maj_inverse: empty word");
    (void)u.multiset();
    const int n = u.max_letter();
    const int k_n = u.count(n);
    const int m_prime = u.size() - k_n;
    require_maj_hypotheses(n, g, level);

    InverseResult out;
    Word cur = u;
    std::vector<int> labels;
    for (int b = 0; b < k_n; ++b) {
        std::vector<int> letters = cur.letters();
        const auto leftmost = std::find(letters.begin(), letters.end(), n);
        letters.erase(leftmost);
        Word prev(std::move(letters));
        const long long label =
            gdes_gmaj(cur, g, level).gmaj - gdes_gmaj(prev, g, level).gmaj;
        out.steps.push_back({cur, static_cast<int>(label)});
        labels.push_back(static_cast<int>(label));
        cur = std::move(prev);
    }
    out.word = std::move(cur);
    out.lambda = collect_lambda(std::move(labels), k_n, m_prime);
    return out;
}

} // namespace mahonia
