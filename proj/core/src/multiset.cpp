#include "mahonia/multiset.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "mahonia/errors.hpp"

namespace mahonia {

namespace {

int parse_int(std::string_view text, const char* what) {
    int value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw parse_error(std::string("invalid ") + what + ": '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

Multiset::Multiset(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
    for (int k : mult_)
        if (k < 1) throw precondition_error("multiset multiplicities must all be >= 1");
    size_ = std::accumulate(mult_.begin(), mult_.end(), 0);
}

Multiset Multiset::from_letters(const std::vector<int>& letters) {
    int n = 0;
    for (int v : letters) {
        if (v < 1) throw precondition_error("letters must be positive");
        n = std::max(n, v);
    }
    std::vector<int> mult(static_cast<size_t>(n), 0);
    for (int v : letters) ++mult[static_cast<size_t>(v - 1)];
    for (int i = 0; i < n; ++i)
        if (mult[static_cast<size_t>(i)] == 0)
            throw precondition_error("letter " + std::to_string(i + 1) +
                                     " is missing; multisets use a contiguous letter range");
    return Multiset(std::move(mult));
}

Multiset Multiset::parse(const std::string& text) {
    if (text.empty()) throw parse_error("empty multiset");
    if (text.find(':') != std::string::npos) {
        // multiplicity form "1:1,2:2,3:2"
        std::vector<int> mult;
        for (std::string_view item : split(text, ',')) {
            size_t colon = item.find(':');
            if (colon == std::string_view::npos)
                throw parse_error("expected letter:multiplicity in '" + std::string(item) + "'");
            int letter = parse_int(item.substr(0, colon), "letter");
            int count = parse_int(item.substr(colon + 1), "multiplicity");
            if (letter != static_cast<int>(mult.size()) + 1)
                throw parse_error("multiset letters must be listed contiguously from 1");
            if (count < 1) throw parse_error("multiplicities must be >= 1");
            mult.push_back(count);
        }
        return Multiset(std::move(mult));
    }
    // element-list form "1,2,2,3,3": canonicalized, order irrelevant
    std::vector<int> letters;
    for (std::string_view item : split(text, ','))
        letters.push_back(parse_int(item, "letter"));
    try {
        return from_letters(letters);
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

int Multiset::multiplicity(int letter) const {
    if (letter < 1 || letter > largest_letter()) return 0;
    return mult_[static_cast<size_t>(letter - 1)];
}

Multiset Multiset::without_largest() const {
    if (mult_.empty()) throw precondition_error("empty multiset has no largest letter");
    return Multiset(std::vector<int>(mult_.begin(), mult_.end() - 1));
}

Multiset Multiset::with_new_largest(int count) const {
    if (count < 1) throw precondition_error("new multiplicity must be >= 1");
    std::vector<int> mult = mult_;
    mult.push_back(count);
    return Multiset(std::move(mult));
}

Coeff Multiset::word_count() const {
    // multinomial(m; k_1..k_n) as a product of binomials over prefix sums
    Coeff result = 1;
    long long seen = 0;
    for (int k : mult_) {
        for (int j = 1; j <= k; ++j) {
            ++seen;
            result = checked_mul(result, seen);
            result /= j; // exact: product of j consecutive integers over j!
        }
    }
    return result;
}

std::string Multiset::to_string() const {
    std::string out;
    for (int i = 0; i < largest_letter(); ++i) {
        if (i) out += ',';
        out += std::to_string(i + 1) + ':' + std::to_string(mult_[static_cast<size_t>(i)]);
    }
    return out;
}

int delta(const Multiset& m, int level) {
    if (level < 1 || level > m.largest_letter())
        throw precondition_error("delta: level out of range [1, n]");
    int sum = 0;
    for (int i = 1; i < level; ++i) sum += m.multiplicity(i);
    return sum;
}

int gamma(const Multiset& m, int gap) {
    int n = m.largest_letter();
    if (gap < 1 || gap > n) throw precondition_error("gamma: gap out of range [1, n]");
    int sum = 0;
    for (int i = n - gap + 1; i <= n - 1; ++i) sum += m.multiplicity(i);
    return sum;
}

} // namespace mahonia
