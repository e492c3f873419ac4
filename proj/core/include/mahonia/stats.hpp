#ifndef MAHONIA_STATS_HPP
#define MAHONIA_STATS_HPP

#include <utility>
#include <vector>

#include "mahonia/word.hpp"

namespace mahonia {

// All statistics are straightforward O(m^2) scans of the word against its
// weakly increasing rearrangement; correctness and auditability over speed.

struct DesMaj {
    std::vector<int> descent_set; // positions i with alpha_i > alpha_{i+1}
    int des = 0;
    long long maj = 0;
};

DesMaj des_maj(const Word& w);

std::vector<std::pair<int, int>> inversion_pairs(const Word& w);
std::vector<std::pair<int, int>> weak_inversion_pairs(const Word& w);

struct InvImv {
    long long inv = 0;
    long long imv = 0;
};

InvImv inv_imv(const Word& w);

/// gDes_l = { i : alpha_i >= alpha_{i+1} + g, alpha_{i+1} >= l }
/// gInv_l = { (i,j) in Inv : alpha_j < l or alpha_i < alpha_j + g }
/// gmaj_l = sum of gDes_l + |gInv_l|
struct GdesGmaj {
    std::vector<int> gdes_set;
    std::vector<std::pair<int, int>> ginv_pairs;
    int gdes = 0;
    long long gmaj = 0;
};

GdesGmaj gdes_gmaj(const Word& w, int g, int level);

/// Counting-only fast paths for the exhaustive sweeps; definitionally equal
/// to the set-building variants above (tests cross-check the two routes).
int gdes_count(const Word& w, int g, int level);
long long gmaj_value(const Word& w, int g, int level);

/// Places i with alpha_i >= x_i + g and alpha_i >= h, against the weakly
/// increasing rearrangement x.  The level parameter is named h here because
/// it conditions on the letter alpha_i; gexc below conditions on x_i instead.
struct Excedances {
    std::vector<int> places;     // gExcp_h, ascending
    std::vector<int> non_places; // complement, ascending
    Word exc;                    // subword at places
    Word nexc;                   // subword at non_places
};

Excedances excedance_places(const Word& w, int g, int h);

/// B^g_i(w) = #{ j : alpha_i - g < x_j < alpha_i }.  1 <= i <= m.
int b_weight(const Word& w, int pos, int g);

/// gden_h = sum over gExcp_h of (i + B^g_i) + imv(gExc_h) + inv(gNexc_h).
long long gden(const Word& w, int g, int h);

/// Places counted by gexc_l: alpha_i >= x_i + g and x_i >= l.
std::vector<int> gexc_places(const Word& w, int g, int level);

int gexc(const Word& w, int g, int level);

/// Everything the CLI reports for one word, with the underlying sets so each
/// number can be recomputed from them.
struct StatReport {
    int des = 0;
    long long maj = 0;
    long long inv = 0;
    long long imv = 0;
    int exc = 0;
    long long den = 0;
    int gdes = 0;
    long long gmaj = 0;
    int gexc = 0;
    long long gden = 0;

    std::vector<int> descent_set;
    std::vector<int> gdes_set;
    std::vector<std::pair<int, int>> inv_pairs;
    std::vector<std::pair<int, int>> imv_pairs;
    std::vector<std::pair<int, int>> ginv_pairs;
    std::vector<int> excedance_set;      // classical Excp
    std::vector<int> gexcedance_set;     // gExcp_h
    std::vector<int> gexc_place_set;     // places counted by gexc_l
    Word exc_subword;
    Word nexc_subword;
    std::vector<int> b_weights;          // B^g_i at each place of gexcedance_set
};

StatReport stat_report(const Word& w, int g, int level, int h);

} // namespace mahonia

#endif
