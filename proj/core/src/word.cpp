#include "mahonia/word.hpp"

#include <algorithm>
#include <charconv>

#include "mahonia/errors.hpp"

namespace mahonia {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int v : letters_) {
        if (v < 1) throw precondition_error("word letters must be positive");
        max_ = std::max(max_, v);
    }
}

Word Word::parse(const std::string& text) {
    if (text.empty()) throw parse_error("empty word");
    std::vector<int> letters;
    if (text.find(',') != std::string::npos) {
        size_t start = 0;
        while (start <= text.size()) {
            size_t pos = text.find(',', start);
            std::string_view item(text.data() + start,
                                  (pos == std::string::npos ? text.size() : pos) - start);
            int value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc{} || ptr != item.data() + item.size() || value < 1)
                throw parse_error("invalid letter '" + std::string(item) + "' in word");
            letters.push_back(value);
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw parse_error(std::string("invalid digit '") + ch + "' in compact word");
            letters.push_back(ch - '0');
        }
    }
    return Word(std::move(letters));
}

int Word::count(int letter) const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), letter));
}

Multiset Word::multiset() const {
    return Multiset::from_letters(letters_);
}

Word Word::sorted() const {
    std::vector<int> copy = letters_;
    std::sort(copy.begin(), copy.end());
    return Word(std::move(copy));
}

std::string Word::to_string() const {
    if (!letters_.empty() && max_ <= 9) {
        std::string out;
        out.reserve(letters_.size());
        for (int v : letters_) out += static_cast<char>('0' + v);
        return out;
    }
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(letters_[i]);
    }
    return out;
}

} // namespace mahonia
