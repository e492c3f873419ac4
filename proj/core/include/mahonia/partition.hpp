#ifndef MAHONIA_PARTITION_HPP
#define MAHONIA_PARTITION_HPP

#include <string>
#include <vector>

namespace mahonia {

/// A partition confined to the box P(s, t): exactly s = box_height weakly
/// decreasing parts (zero-padded on construction), each at most t = box_width.
class Partition {
public:
    Partition() = default;

    /// Pads parts with zeros up to box_height; rejects more than box_height
    /// parts, parts above box_width, negative parts, or increasing parts.
    Partition(std::vector<int> parts, int box_height, int box_width);

    /// Parses "9,9,5,4" (weakly decreasing) into the given box.  An empty
    /// string denotes the zero partition.  Throws parse_error on bad text,
    /// precondition_error if the result does not fit the box.
    static Partition parse(const std::string& text, int box_height, int box_width);

    int box_height() const { return height_; }
    int box_width() const { return width_; }

    /// 1-indexed part access, valid for 1 <= i <= box_height.
    int part(int i) const { return parts_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& parts() const { return parts_; }

    long long weight() const;

    /// All parts, zeros included: "9,9,5,4" or "0,0,0,0".
    std::string to_string() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int height_ = 0;
    int width_ = 0;
};

} // namespace mahonia

#endif
