#include "mahonia/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <mutex>
#include <thread>

#include "mahonia/errors.hpp"
#include "mahonia/stats.hpp"

namespace mahonia {

namespace {

std::vector<int> ascending_letters(const Multiset& m) {
    std::vector<int> letters;
    letters.reserve(static_cast<size_t>(m.size()));
    for (int v = 1; v <= m.largest_letter(); ++v)
        letters.insert(letters.end(), static_cast<size_t>(m.multiplicity(v)), v);
    return letters;
}

} // namespace

WordStream::WordStream(const Multiset& m) : current_(ascending_letters(m)) {}

bool WordStream::advance() {
    if (done_) return false;
    std::vector<int> letters = current_.letters();
    if (!std::next_permutation(letters.begin(), letters.end())) {
        done_ = true;
        return false;
    }
    current_ = Word(std::move(letters));
    return true;
}

void for_each_word(const Multiset& m, const std::function<void(const Word&)>& fn) {
    WordStream stream(m);
    do {
        fn(stream.current());
    } while (stream.advance());
}

void for_each_multiset(int max_size, int max_largest,
                       const std::function<void(const Multiset&)>& fn) {
    // ascending largest letter, then lexicographic multiplicity vectors
    std::vector<int> mult;
    std::function<void(int, int)> rec = [&](int letters_left, int budget) {
        if (letters_left == 0) {
            fn(Multiset(mult));
            return;
        }
        // keep room for the remaining letters, one copy each at minimum
        for (int k = 1; k + (letters_left - 1) <= budget; ++k) {
            mult.push_back(k);
            rec(letters_left - 1, budget - k);
            mult.pop_back();
        }
    };
    for (int n = 1; n <= max_largest; ++n)
        if (n <= max_size) rec(n, max_size);
}

namespace {

StatSpec::Kind kind_of(const std::string& name) {
    using Kind = StatSpec::Kind;
    if (name == "des") return Kind::des;
    if (name == "maj") return Kind::maj;
    if (name == "inv") return Kind::inv;
    if (name == "imv") return Kind::imv;
    if (name == "exc") return Kind::exc;
    if (name == "den") return Kind::den;
    if (name == "gdes") return Kind::gdes;
    if (name == "gmaj") return Kind::gmaj;
    if (name == "gexc") return Kind::gexc;
    if (name == "gden") return Kind::gden;
    throw parse_error("unknown statistic '" + name + "'");
}

bool uses_h(StatSpec::Kind kind) {
    return kind == StatSpec::Kind::den || kind == StatSpec::Kind::gden;
}

int parse_positive(std::string_view text, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1)
        throw parse_error(std::string("invalid ") + what + " '" + std::string(text) + "'");
    return value;
}

} // namespace

StatSpec StatSpec::parse(const std::string& text) {
    if (text.empty()) throw parse_error("empty statistic spec");
    StatSpec spec;
    spec.spelling = text;

    size_t digits = 0;
    while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits]))) ++digits;

    if (digits > 0) {
        // r-prefix alias: "<r>des" means gap r, level 1
        const std::string rest = text.substr(digits);
        if (rest.find(':') != std::string::npos)
            throw parse_error("r-prefix aliases take no explicit parameters: '" + text + "'");
        spec.kind = kind_of(rest);
        if (!spec.takes_params())
            throw parse_error("statistic '" + rest + "' takes no parameters");
        spec.g = parse_positive(text.substr(0, digits), "gap prefix");
        spec.level = 1;
        return spec;
    }

    size_t colon = text.find(':');
    spec.kind = kind_of(text.substr(0, colon));
    bool saw_level = false;
    while (colon != std::string::npos) {
        const size_t start = colon + 1;
        colon = text.find(':', start);
        const std::string_view item(text.data() + start,
                                    (colon == std::string::npos ? text.size() : colon) - start);
        if (item.size() < 3 || item[1] != '=')
            throw parse_error("expected g=, l= or h= in statistic spec '" + text + "'");
        if (!spec.takes_params())
            throw parse_error("statistic '" + spec.name() + "' takes no parameters");
        const int value = parse_positive(item.substr(2), "parameter");
        switch (item[0]) {
        case 'g':
            spec.g = value;
            break;
        case 'l':
            if (uses_h(spec.kind))
                throw parse_error("the Denert family takes h=, not l=: '" + text + "'");
            spec.level = value;
            saw_level = true;
            break;
        case 'h':
            if (!uses_h(spec.kind))
                throw parse_error("only the Denert family takes h=: '" + text + "'");
            spec.level = value;
            saw_level = true;
            break;
        default:
            throw parse_error("unknown parameter '" + std::string(item) + "' in statistic spec");
        }
    }
    (void)saw_level;
    return spec;
}

bool StatSpec::takes_params() const {
    return kind != Kind::inv && kind != Kind::imv;
}

std::string StatSpec::name() const {
    switch (kind) {
    case Kind::des: return "des";
    case Kind::maj: return "maj";
    case Kind::inv: return "inv";
    case Kind::imv: return "imv";
    case Kind::exc: return "exc";
    case Kind::den: return "den";
    case Kind::gdes: return "gdes";
    case Kind::gmaj: return "gmaj";
    case Kind::gexc: return "gexc";
    case Kind::gden: return "gden";
    }
    return "?";
}

long long StatSpec::value(const Word& w) const {
    switch (kind) {
    case Kind::des:
    case Kind::gdes: return gdes_count(w, g, level);
    case Kind::maj:
    case Kind::gmaj: return gmaj_value(w, g, level);
    case Kind::inv: return inv_imv(w).inv;
    case Kind::imv: return inv_imv(w).imv;
    case Kind::exc:
    case Kind::gexc: return gexc(w, g, level);
    case Kind::den:
    case Kind::gden: return gden(w, g, level);
    }
    return 0;
}

std::vector<BivarPoly> joint_dists(const Multiset& m,
                                   const std::vector<std::pair<StatSpec, StatSpec>>& pairs,
                                   int threads) {
    std::vector<BivarPoly> totals(pairs.size());
    if (pairs.empty()) return totals;

    const auto scan_range = [&](std::vector<int>& letters, size_t suffix_begin,
                                std::vector<BivarPoly>& acc) {
        while (true) {
            const Word w(letters);
            for (size_t p = 0; p < pairs.size(); ++p)
                acc[p].add_term(static_cast<int>(pairs[p].first.value(w)),
                                static_cast<int>(pairs[p].second.value(w)), 1);
            if (!std::next_permutation(letters.begin() + static_cast<long>(suffix_begin),
                                       letters.end()))
                break;
        }
    };

    if (threads <= 1 || m.size() < 4) {
        std::vector<int> letters = ascending_letters(m);
        scan_range(letters, 0, totals);
        return totals;
    }

    // split the stream by first letter (prefix-disjoint chunks); the merge
    // below is a fixed-order sum, so the result is chunking-independent
    std::vector<std::vector<int>> chunk_letters;
    for (int v = 1; v <= m.largest_letter(); ++v) {
        std::vector<int> letters;
        letters.push_back(v);
        std::vector<int> mult = m.multiplicities();
        --mult[static_cast<size_t>(v - 1)];
        for (int u = 1; u <= m.largest_letter(); ++u)
            letters.insert(letters.end(), static_cast<size_t>(mult[static_cast<size_t>(u - 1)]), u);
        chunk_letters.push_back(std::move(letters));
    }

    std::vector<std::vector<BivarPoly>> partial(chunk_letters.size(),
                                                std::vector<BivarPoly>(pairs.size()));
    std::atomic<size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;

    const size_t worker_count =
        std::min<size_t>(static_cast<size_t>(threads), chunk_letters.size());
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (size_t t = 0; t < worker_count; ++t) {
        workers.emplace_back([&] {
            try {
                while (true) {
                    const size_t i = next.fetch_add(1);
                    if (i >= chunk_letters.size()) return;
                    scan_range(chunk_letters[i], 1, partial[i]);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& worker : workers) worker.join();
    if (error) std::rethrow_exception(error);

    for (const auto& chunk : partial)
        for (size_t p = 0; p < pairs.size(); ++p) totals[p] += chunk[p];
    return totals;
}

BivarPoly joint_dist(const Multiset& m, const StatSpec& t_stat, const StatSpec& q_stat,
                     int threads) {
    return joint_dists(m, {{t_stat, q_stat}}, threads)[0];
}

} // namespace mahonia
