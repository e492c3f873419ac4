#ifndef MAHONIA_WORD_HPP
#define MAHONIA_WORD_HPP

#include <string>
#include <vector>

#include "mahonia/multiset.hpp"

namespace mahonia {

/// A word (multipermutation) alpha_1 ... alpha_m of positive letters.
/// Positions and letters are 1-indexed in every report and serialization;
/// storage is a plain vector.  A word need not use a contiguous letter
/// range; operations that require a proper multiset validate it themselves.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    /// Accepts the compact digit-string form "4121155325" (all letters <= 9)
    /// or the comma-separated form "4,12,3".  Throws parse_error.
    static Word parse(const std::string& text);

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int max_letter() const { return max_; }

    /// 1-indexed letter access.
    int at(int pos) const { return letters_[static_cast<size_t>(pos - 1)]; }
    const std::vector<int>& letters() const { return letters_; }

    int count(int letter) const;

    /// The multiset realized by the word.  Throws precondition_error if some
    /// value in [1, max_letter] does not occur.
    Multiset multiset() const;

    /// The weakly increasing rearrangement x_1 <= ... <= x_m.
    Word sorted() const;

    /// Compact digit-string when all letters are <= 9 (and the word is
    /// nonempty), comma-separated otherwise.
    std::string to_string() const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<int> letters_;
    int max_ = 0;
};

/// The weakly increasing rearrangement of w.
inline Word sorted_word(const Word& w) { return w.sorted(); }

} // namespace mahonia

#endif
