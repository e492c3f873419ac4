#ifndef MAHONIA_ENUMERATION_HPP
#define MAHONIA_ENUMERATION_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mahonia/multiset.hpp"
#include "mahonia/poly.hpp"
#include "mahonia/word.hpp"

namespace mahonia {

/// Sequential cursor over all words of S_M in lexicographic order, starting
/// at the weakly increasing word.  Never materializes the full set.
class WordStream {
public:
    explicit WordStream(const Multiset& m);

    const Word& current() const { return current_; }
    bool done() const { return done_; }

    /// Steps to the next word; returns false once the stream is exhausted.
    bool advance();

private:
    Word current_;
    bool done_ = false;
};

void for_each_word(const Multiset& m, const std::function<void(const Word&)>& fn);

/// All multisets with size <= max_size and largest letter <= max_largest
/// (every multiplicity >= 1), in a fixed deterministic order.
void for_each_multiset(int max_size, int max_largest,
                       const std::function<void(const Multiset&)>& fn);

/// A named statistic with its parameters.  Grammar accepted by parse():
///   name[:g=G][:l=L][:h=H]      defaults g=1, l=1, h=1
///   <r>name                     r-prefix alias, g=r and level 1 ("2des")
/// Names: des maj inv imv exc den gdes gmaj gexc gden.  The level parameter
/// is written l for the descent/excedance family and h for the Denert
/// family; inv and imv take no parameters.
struct StatSpec {
    enum class Kind { des, maj, inv, imv, exc, den, gdes, gmaj, gexc, gden };

    Kind kind = Kind::des;
    int g = 1;
    int level = 1;        // l or h depending on the family
    std::string spelling; // as written, echoed in outputs

    static StatSpec parse(const std::string& text);

    long long value(const Word& w) const;
    bool takes_params() const;
    std::string name() const;
};

/// Sum over S_M of t^{t_stat(w)} q^{q_stat(w)}.  With threads > 1 the word
/// stream is split into prefix-disjoint chunks scanned concurrently and the
/// partial polynomials are merged in a fixed order, so the result does not
/// depend on the chunking.
BivarPoly joint_dist(const Multiset& m, const StatSpec& t_stat, const StatSpec& q_stat,
                     int threads = 1);

/// Several joint distributions in one pass over S_M.
std::vector<BivarPoly> joint_dists(const Multiset& m,
                                   const std::vector<std::pair<StatSpec, StatSpec>>& pairs,
                                   int threads = 1);

} // namespace mahonia

#endif
