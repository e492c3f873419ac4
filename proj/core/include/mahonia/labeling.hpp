#ifndef MAHONIA_LABELING_HPP
#define MAHONIA_LABELING_HPP

#include <vector>

#include "mahonia/word.hpp"

namespace mahonia {

/// Labels and stars on the gaps of a word.  Gap s (0 <= s <= word length) is
/// the space after a prefix of length s: gap 0 precedes the word, "the space
/// before alpha_y" is gap y-1, "the space after alpha_i" is gap i.  The
/// unstarred gaps carry each label 0..m' exactly once, where m' is the
/// number of letters smaller than the distinguished largest letter n.
class LabeledSpaces {
public:
    LabeledSpaces(std::vector<int> label_by_gap, int label_count);

    int gap_count() const { return static_cast<int>(label_by_gap_.size()); }
    int label_count() const { return label_count_; } // labels are 0..label_count-1

    bool starred(int gap) const { return label_by_gap_[static_cast<size_t>(gap)] < 0; }
    int label_at(int gap) const { return label_by_gap_[static_cast<size_t>(gap)]; }
    int gap_of_label(int label) const { return gap_by_label_[static_cast<size_t>(label)]; }

    /// Labels of the unstarred gaps in left-to-right order (the T tuple).
    std::vector<int> unstarred_labels() const;

    /// Gap index of the k-th unstarred gap, k = 1..label_count.
    int unstarred_gap(int k) const;

private:
    std::vector<int> label_by_gap_; // -1 marks a starred gap
    std::vector<int> gap_by_label_;
    int label_count_ = 0;
};

/// The labeling that drives the den-side insertion map.  w realizes
/// M' + {n^b} for some b >= 0 (n passed explicitly since b may be 0):
///   - star the gap after each alpha_i with i > m';
///   - the rightmost gamma_g + 1 unstarred gaps get 0..gamma_g right to left;
///   - the gaps before the g-gap h-level excedance letters get
///     gamma_g+1..gamma_g+s right to left;
///   - the remaining unstarred gaps get gamma_g+s+1..m' left to right.
LabeledSpaces gden_labeling(const Word& w, int n, int g, int h);

/// The labeling that drives the maj-side insertion map, together with the
/// marked position set
///   S(w) = { j >= 2 : alpha_{j-1} >= alpha_j + g, alpha_j >= level }
///        + { j : alpha_j < level or n > alpha_j >= n-g+1 }.
/// Stars sit before each n; the final gap is 0; gaps before alpha_j with
/// j in S get 1..|S| right to left; the rest get |S|+1..m' left to right.
struct GmajLabeling {
    std::vector<int> marked_positions; // S(w), ascending
    LabeledSpaces spaces;
};

GmajLabeling gmaj_labeling(const Word& w, int n, int g, int level);

} // namespace mahonia

#endif
