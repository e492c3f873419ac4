#ifndef MAHONIA_MULTISET_HPP
#define MAHONIA_MULTISET_HPP

#include <string>
#include <vector>

#include "mahonia/checked.hpp"

namespace mahonia {

/// The multiset {1^{k_1}, 2^{k_2}, ..., n^{k_n}}: every letter value from 1
/// up to the largest letter occurs at least once.  The empty multiset is
/// allowed (it is the reduction of a single-letter multiset after dropping
/// its largest letter).
class Multiset {
public:
    Multiset() = default;

    /// multiplicities[i] is k_{i+1}, the multiplicity of letter i+1.
    /// Throws precondition_error unless every entry is >= 1.
    explicit Multiset(std::vector<int> multiplicities);

    /// Builds the multiset realized by a list of letters.  Throws
    /// precondition_error if some value in [1, max] is missing.
    static Multiset from_letters(const std::vector<int>& letters);

    /// Accepts "1:1,2:2,3:2" (letter:multiplicity, contiguous from 1) or the
    /// element-list form "1,2,2,3,3" (canonicalized).  Throws parse_error.
    static Multiset parse(const std::string& text);

    int largest_letter() const { return static_cast<int>(mult_.size()); } // n
    int size() const { return size_; }                                    // m
    bool empty() const { return mult_.empty(); }
    int multiplicity(int letter) const;
    const std::vector<int>& multiplicities() const { return mult_; }

    /// M' = M with all copies of the largest letter removed.
    Multiset without_largest() const;

    /// M extended by a new largest letter n+1 with the given multiplicity.
    Multiset with_new_largest(int count) const;

    /// Number of words realizing the multiset (multinomial coefficient),
    /// computed with overflow-checked arithmetic.
    Coeff word_count() const;

    /// Canonical multiplicity form, e.g. "1:1,2:2,3:2".
    std::string to_string() const;

    bool operator==(const Multiset&) const = default;

private:
    std::vector<int> mult_;
    int size_ = 0;
};

/// delta_l = k_1 + ... + k_{l-1}, with delta_1 = 0.  Requires 1 <= l <= n.
int delta(const Multiset& m, int level);

/// gamma_g = k_{n-g+1} + ... + k_{n-1}, with gamma_1 = 0.  Requires 1 <= g <= n.
int gamma(const Multiset& m, int gap);

} // namespace mahonia

#endif
