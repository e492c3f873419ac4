#include "mahonia/stats.hpp"

#include <algorithm>

#include "mahonia/errors.hpp"
#include "mahonia/params.hpp"

namespace mahonia {

DesMaj des_maj(const Word& w) {
    DesMaj out;
    for (int i = 1; i < w.size(); ++i) {
        if (w.at(i) > w.at(i + 1)) {
            out.descent_set.push_back(i);
            out.maj += i;
        }
    }
    out.des = static_cast<int>(out.descent_set.size());
    return out;
}

std::vector<std::pair<int, int>> inversion_pairs(const Word& w) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w.at(i) > w.at(j)) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> weak_inversion_pairs(const Word& w) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w.at(i) >= w.at(j)) out.emplace_back(i, j);
    return out;
}

InvImv inv_imv(const Word& w) {
    InvImv out;
    for (int i = 1; i <= w.size(); ++i) {
        for (int j = i + 1; j <= w.size(); ++j) {
            if (w.at(i) > w.at(j)) ++out.inv;
            if (w.at(i) >= w.at(j)) ++out.imv;
        }
    }
    return out;
}

GdesGmaj gdes_gmaj(const Word& w, int g, int level) {
    StatParams{g, level, 1}.validate();
    GdesGmaj out;
    for (int i = 1; i < w.size(); ++i) {
        if (w.at(i) >= w.at(i + 1) + g && w.at(i + 1) >= level) {
            out.gdes_set.push_back(i);
            out.gmaj += i;
        }
    }
    out.gdes = static_cast<int>(out.gdes_set.size());
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w.at(i) > w.at(j) && (w.at(j) < level || w.at(i) < w.at(j) + g))
                out.ginv_pairs.emplace_back(i, j);
    out.gmaj += static_cast<long long>(out.ginv_pairs.size());
    return out;
}

int gdes_count(const Word& w, int g, int level) {
    StatParams{g, level, 1}.validate();
    int count = 0;
    for (int i = 1; i < w.size(); ++i)
        if (w.at(i) >= w.at(i + 1) + g && w.at(i + 1) >= level) ++count;
    return count;
}

long long gmaj_value(const Word& w, int g, int level) {
    StatParams{g, level, 1}.validate();
    long long total = 0;
    for (int i = 1; i < w.size(); ++i)
        if (w.at(i) >= w.at(i + 1) + g && w.at(i + 1) >= level) total += i;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w.at(i) > w.at(j) && (w.at(j) < level || w.at(i) < w.at(j) + g)) ++total;
    return total;
}

Excedances excedance_places(const Word& w, int g, int h) {
    StatParams{g, 1, h}.validate();
    const Word sorted = w.sorted();
    Excedances out;
    std::vector<int> exc_letters, nexc_letters;
    for (int i = 1; i <= w.size(); ++i) {
        if (w.at(i) >= sorted.at(i) + g && w.at(i) >= h) {
            out.places.push_back(i);
            exc_letters.push_back(w.at(i));
        } else {
            out.non_places.push_back(i);
            nexc_letters.push_back(w.at(i));
        }
    }
    out.exc = Word(std::move(exc_letters));
    out.nexc = Word(std::move(nexc_letters));
    return out;
}

int b_weight(const Word& w, int pos, int g) {
    if (pos < 1 || pos > w.size()) throw precondition_error("b_weight: position out of range");
    StatParams{g, 1, 1}.validate();
    const Word sorted = w.sorted();
    const int a = w.at(pos);
    int count = 0;
    for (int j = 1; j <= w.size(); ++j)
        if (a - g < sorted.at(j) && sorted.at(j) < a) ++count;
    return count;
}

namespace {

long long inv_of(const std::vector<int>& v) {
    long long count = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++count;
    return count;
}

long long imv_of(const std::vector<int>& v) {
    long long count = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] >= v[j]) ++count;
    return count;
}

} // namespace

long long gden(const Word& w, int g, int h) {
    StatParams{g, 1, h}.validate();
    const std::vector<int>& a = w.letters();
    std::vector<int> x(a);
    std::sort(x.begin(), x.end());
    std::vector<int> exc, nexc;
    long long sum = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] >= x[i] + g && a[i] >= h) {
            sum += static_cast<long long>(i) + 1;
            // B^g: letters strictly between a[i]-g and a[i]
            sum += std::lower_bound(x.begin(), x.end(), a[i]) -
                   std::upper_bound(x.begin(), x.end(), a[i] - g);
            exc.push_back(a[i]);
        } else {
            nexc.push_back(a[i]);
        }
    }
    return sum + imv_of(exc) + inv_of(nexc);
}

std::vector<int> gexc_places(const Word& w, int g, int level) {
    StatParams{g, level, 1}.validate();
    const Word sorted = w.sorted();
    std::vector<int> out;
    for (int i = 1; i <= w.size(); ++i)
        if (w.at(i) >= sorted.at(i) + g && sorted.at(i) >= level) out.push_back(i);
    return out;
}

int gexc(const Word& w, int g, int level) {
    return static_cast<int>(gexc_places(w, g, level).size());
}

StatReport stat_report(const Word& w, int g, int level, int h) {
    StatParams{g, level, h}.validate();
    StatReport r;

    const DesMaj dm = des_maj(w);
    r.descent_set = dm.descent_set;
    r.des = dm.des;
    r.maj = dm.maj;

    r.inv_pairs = inversion_pairs(w);
    r.imv_pairs = weak_inversion_pairs(w);
    r.inv = static_cast<long long>(r.inv_pairs.size());
    r.imv = static_cast<long long>(r.imv_pairs.size());

    const Excedances classical = excedance_places(w, 1, 1);
    r.excedance_set = classical.places;
    r.exc = static_cast<int>(classical.places.size());
    r.den = gden(w, 1, 1);

    const GdesGmaj gg = gdes_gmaj(w, g, level);
    r.gdes_set = gg.gdes_set;
    r.ginv_pairs = gg.ginv_pairs;
    r.gdes = gg.gdes;
    r.gmaj = gg.gmaj;

    const Excedances refined = excedance_places(w, g, h);
    r.gexcedance_set = refined.places;
    r.exc_subword = refined.exc;
    r.nexc_subword = refined.nexc;
    for (int i : refined.places) r.b_weights.push_back(b_weight(w, i, g));
    r.gden = gden(w, g, h);

    r.gexc_place_set = gexc_places(w, g, level);
    r.gexc = static_cast<int>(r.gexc_place_set.size());

    return r;
}

} // namespace mahonia
