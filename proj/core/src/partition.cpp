#include "mahonia/partition.hpp"

#include <charconv>

#include "mahonia/errors.hpp"

namespace mahonia {

Partition::Partition(std::vector<int> parts, int box_height, int box_width)
    : parts_(std::move(parts)), height_(box_height), width_(box_width) {
    if (height_ < 0 || width_ < 0)
        throw precondition_error("partition box dimensions must be >= 0");
    if (static_cast<int>(parts_.size()) > height_)
        throw precondition_error("partition has more parts than the box height");
    parts_.resize(static_cast<size_t>(height_), 0);
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw precondition_error("partition parts must be >= 0");
        if (parts_[i] > width_)
            throw precondition_error("partition part exceeds the box width");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw precondition_error("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text, int box_height, int box_width) {
    std::vector<int> parts;
    if (!text.empty()) {
        size_t start = 0;
        while (start <= text.size()) {
            size_t pos = text.find(',', start);
            std::string_view item(text.data() + start,
                                  (pos == std::string::npos ? text.size() : pos) - start);
            int value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc{} || ptr != item.data() + item.size())
                throw parse_error("invalid partition part '" + std::string(item) + "'");
            parts.push_back(value);
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
    }
    return Partition(std::move(parts), box_height, box_width);
}

long long Partition::weight() const {
    long long sum = 0;
    for (int p : parts_) sum += p;
    return sum;
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

} // namespace mahonia
