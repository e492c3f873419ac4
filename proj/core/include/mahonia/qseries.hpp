#ifndef MAHONIA_QSERIES_HPP
#define MAHONIA_QSERIES_HPP

#include <vector>

#include "mahonia/partition.hpp"
#include "mahonia/poly.hpp"

namespace mahonia {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
QPoly q_integer(int n);

/// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
QPoly q_factorial(int n);

/// The Gaussian polynomial [s+t choose s]_q, the generating function of
/// partitions in the s-by-t box by weight.  s, t >= 0.
QPoly gauss_binomial(int s, int t);

/// [s; k_1,...,k_r]_q with s = sum k_i, computed as a product of Gaussian
/// binomials over the prefix sums.
QPoly q_multinomial(const std::vector<int>& ks);

/// The same coefficient computed from the definition [s]_q! / prod [k_i]_q!
/// by exact polynomial division.  A nonzero remainder is an internal error.
QPoly q_multinomial_by_division(const std::vector<int>& ks);

/// All partitions with exactly s parts (zeros allowed) and largest part at
/// most t, in ascending lexicographic order of the zero-padded part tuples:
/// (0,0) < (1,0) < (1,1) < (2,0) < ...  Count = binomial(s+t, s).
std::vector<Partition> partitions_in_box(int s, int t);

/// Streaming form of partitions_in_box, same order, no materialization.
template <typename Fn>
void for_each_partition_in_box(int s, int t, Fn&& fn) {
    std::vector<int> parts(static_cast<size_t>(s), 0);
    while (true) {
        fn(static_cast<const std::vector<int>&>(parts));
        // next tuple: rightmost part that can grow without breaking the
        // weakly decreasing shape or the box bound
        int i = s - 1;
        while (i >= 0) {
            int cap = (i == 0) ? t : parts[static_cast<size_t>(i - 1)];
            if (parts[static_cast<size_t>(i)] < cap) break;
            --i;
        }
        if (i < 0) return;
        ++parts[static_cast<size_t>(i)];
        for (size_t j = static_cast<size_t>(i) + 1; j < parts.size(); ++j) parts[j] = 0;
    }
}

} // namespace mahonia

#endif
