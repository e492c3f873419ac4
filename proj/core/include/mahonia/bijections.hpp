#ifndef MAHONIA_BIJECTIONS_HPP
#define MAHONIA_BIJECTIONS_HPP

#include <vector>

#include "mahonia/partition.hpp"
#include "mahonia/word.hpp"

namespace mahonia {

/// Inserts one copy of the largest letter n into w according to the label c
/// of the den-side labeling.  w realizes M' + {n^(a-1)} with a >= 1 and
/// 0 <= c <= m'.  The word grows by one letter.
Word phi(const Word& w, int c, int n, int g, int h);

struct PsiResult {
    Word word; // one n removed
    int label; // c = gden_h(input) - gden_h(word)
};

/// Inverse of phi: removes the leftmost n of u and recovers the label.
/// u must contain at least one n.
PsiResult psi(const Word& u, int n, int g, int h);

/// One step of an iterated insertion map, recorded for tracing.
struct MapStep {
    Word word;                          // w^(b), before the insertion
    std::vector<int> labels;            // T^(b), labels of unstarred gaps
    int chosen_index = 0;               // y_b, 1-indexed into labels
    int consumed_label = 0;             // labels[y_b - 1]
    std::vector<int> lambda_remaining;  // parts of lambda^(b), before consumption
};

struct MapTrace {
    std::vector<MapStep> steps;
    Word result;
};

/// The iterated den-side insertion map: starting from w over M' and a
/// partition lambda in the k_n-by-m' box, inserts k_n copies of
/// n = max(w) + 1, consuming one part of lambda per step (the greatest index
/// of T^(b) whose label is a remaining part, multiset semantics).
/// gden_h(result) = gden_h(w) + |lambda|.
MapTrace phi_den(const Word& w, const Partition& lambda, int g, int h);

struct InverseStep {
    Word word;  // before the extraction
    int label;  // recovered label
};

struct InverseResult {
    Word word;
    Partition lambda;
    std::vector<InverseStep> steps;
};

/// Inverse of phi_den: peels off the copies of the largest letter with psi,
/// collecting labels; sorted decreasingly they form lambda.
InverseResult phi_den_inverse(const Word& u, int g, int h);

/// The iterated maj-side insertion map: same driver as phi_den but the
/// insertion puts n into the y_b-th unstarred gap of the maj-side labeling.
/// gmaj_l(result) = gmaj_l(w) + |lambda|.
MapTrace phi_maj(const Word& w, const Partition& lambda, int g, int level);

/// Inverse of phi_maj: deletes the leftmost n; the consumed label is the
/// gmaj difference.
InverseResult phi_maj_inverse(const Word& u, int g, int level);

} // namespace mahonia

#endif
