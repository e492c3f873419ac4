#include "mahonia/labeling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mahonia/errors.hpp"
#include "mahonia/stats.hpp"

namespace mahonia {

LabeledSpaces::LabeledSpaces(std::vector<int> label_by_gap, int label_count)
    : label_by_gap_(std::move(label_by_gap)), label_count_(label_count) {
    gap_by_label_.assign(static_cast<size_t>(label_count_), -1);
    for (int gap = 0; gap < gap_count(); ++gap) {
        const int label = label_by_gap_[static_cast<size_t>(gap)];
        if (label < 0) continue;
        if (label >= label_count_ || gap_by_label_[static_cast<size_t>(label)] != -1)
            throw std::logic_error("labeling produced a duplicate or out-of-range label");
        gap_by_label_[static_cast<size_t>(label)] = gap;
    }
    for (int v : gap_by_label_)
        if (v < 0) throw std::logic_error("labeling left a label unused");
}

std::vector<int> LabeledSpaces::unstarred_labels() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(label_count_));
    for (int gap = 0; gap < gap_count(); ++gap)
        if (!starred(gap)) out.push_back(label_at(gap));
    return out;
}

int LabeledSpaces::unstarred_gap(int k) const {
    int seen = 0;
    for (int gap = 0; gap < gap_count(); ++gap) {
        if (starred(gap)) continue;
        if (++seen == k) return gap;
    }
    throw precondition_error("unstarred gap index out of range");
}

namespace {

// A word over M' + {n^b}: letters bounded by n, contiguous from 1, and when
// no n occurs the largest letter must be exactly n-1 (empty only when n = 1).
void validate_over(const Word& w, int n) {
    if (n < 1) throw precondition_error("largest letter must be >= 1");
    if (w.max_letter() > n)
        throw precondition_error("word contains a letter above the declared largest letter");
    if (!w.empty()) {
        (void)w.multiset(); // throws if the letter range has holes
        if (w.count(n) == 0 && w.max_letter() != n - 1)
            throw precondition_error("word without the largest letter must use exactly 1..n-1");
    } else if (n != 1) {
        throw precondition_error("an empty word is only valid when the largest letter is 1");
    }
}

int count_in_range(const Word& w, int lo, int hi) {
    int count = 0;
    for (int v : w.letters())
        if (lo <= v && v <= hi) ++count;
    return count;
}

} // namespace

LabeledSpaces gden_labeling(const Word& w, int n, int g, int h) {
    if (g < 1 || h < 1) throw precondition_error("gden_labeling: parameters must be >= 1");
    if (g > n) throw precondition_error("gden_labeling: gap must be <= largest letter");
    validate_over(w, n);

    const int len = w.size();
    const int m_prime = len - w.count(n);
    const int gam = count_in_range(w, n - g + 1, n - 1); // gamma_g of the multiset

    std::vector<int> label_by_gap(static_cast<size_t>(len) + 1, -1);
    // the gaps after alpha_i for i > m' are starred; gaps 0..m' remain
    std::vector<bool> taken(static_cast<size_t>(m_prime) + 1, false);

    // rightmost gam+1 unstarred gaps carry 0..gam, increasing leftward
    for (int j = 0; j <= gam; ++j) {
        label_by_gap[static_cast<size_t>(m_prime - j)] = j;
        taken[static_cast<size_t>(m_prime - j)] = true;
    }

    // gaps before the excedance letters carry gam+1..gam+s, increasing leftward
    const Excedances exc = excedance_places(w, g, h);
    int next = gam + 1;
    for (auto it = exc.places.rbegin(); it != exc.places.rend(); ++it) {
        const int gap = *it - 1;
        if (gap > m_prime - gam - 1 || taken[static_cast<size_t>(gap)])
            throw std::logic_error("gden_labeling: excedance gap collides with a tail label");
        label_by_gap[static_cast<size_t>(gap)] = next++;
        taken[static_cast<size_t>(gap)] = true;
    }

    // everything else, left to right
    for (int gap = 0; gap <= m_prime; ++gap) {
        if (taken[static_cast<size_t>(gap)]) continue;
        label_by_gap[static_cast<size_t>(gap)] = next++;
    }
    return LabeledSpaces(std::move(label_by_gap), m_prime + 1);
}

GmajLabeling gmaj_labeling(const Word& w, int n, int g, int level) {
    if (g < 1 || level < 1) throw precondition_error("gmaj_labeling: parameters must be >= 1");
    validate_over(w, n);

    const int len = w.size();
    const int m_prime = len - w.count(n);

    std::set<int> marked;
    for (int j = 2; j <= len; ++j)
        if (w.at(j - 1) >= w.at(j) + g && w.at(j) >= level) marked.insert(j);
    for (int j = 1; j <= len; ++j)
        if (w.at(j) < level || (n > w.at(j) && w.at(j) >= n - g + 1)) marked.insert(j);

    std::vector<int> label_by_gap(static_cast<size_t>(len) + 1, -1);
    std::vector<bool> starred(static_cast<size_t>(len) + 1, false);
    for (int j = 1; j <= len; ++j)
        if (w.at(j) == n) starred[static_cast<size_t>(j - 1)] = true;

    label_by_gap[static_cast<size_t>(len)] = 0;

    int next = 1;
    for (auto it = marked.rbegin(); it != marked.rend(); ++it) {
        const int gap = *it - 1;
        if (starred[static_cast<size_t>(gap)])
            throw std::logic_error("gmaj_labeling: marked gap collides with a star");
        label_by_gap[static_cast<size_t>(gap)] = next++;
    }

    for (int gap = 0; gap < len; ++gap) {
        if (starred[static_cast<size_t>(gap)] || label_by_gap[static_cast<size_t>(gap)] >= 0)
            continue;
        label_by_gap[static_cast<size_t>(gap)] = next++;
    }
    if (next != m_prime + 1)
        throw std::logic_error("gmaj_labeling: label count mismatch");

    GmajLabeling out{std::vector<int>(marked.begin(), marked.end()),
                     LabeledSpaces(std::move(label_by_gap), m_prime + 1)};
    return out;
}

} // namespace mahonia
