#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "mahonia/mahonia.hpp"

namespace mahonia::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kFormatVersion = "1";

// ---------------------------------------------------------------------------
// output plumbing

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

void write_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_quote(row[i]);
        }
        out << '\n';
    }
}

struct Output {
    std::string format = "text";
    json parameters = json::object();
    json result = json::object();
    std::vector<std::vector<std::string>> csv_rows; // header first
    std::string text;

    void emit(const std::string& command, std::ostream& out) const {
        if (format == "json") {
            json doc;
            doc["format_version"] = kFormatVersion;
            doc["command"] = command;
            doc["parameters"] = parameters;
            doc["result"] = result;
            out << doc.dump(2) << '\n';
        } else if (format == "csv") {
            write_csv(out, csv_rows);
        } else {
            out << text;
        }
    }
};

std::string join_ints(const std::vector<int>& values, const char* sep = " ") {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string tuple_list(const std::vector<int>& values) {
    std::string out = "(";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out + ")";
}

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
    json arr = json::array();
    for (const auto& [a, b] : pairs) arr.push_back(json::array({a, b}));
    return arr;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MAHONIA_THREADS")) {
        const int value = std::atoi(env);
        if (value > 0) return value;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// ---------------------------------------------------------------------------
// stats

int cmd_stats(const std::string& word_text, int g, int l, int h, Output& output,
              std::ostream& out) {
    const Word w = Word::parse(word_text);
    const StatReport r = stat_report(w, g, l, h);

    output.parameters = {{"word", w.to_string()}, {"g", g}, {"l", l}, {"h", h}};
    output.result = {
        {"values",
         {{"des", r.des},
          {"maj", r.maj},
          {"inv", r.inv},
          {"imv", r.imv},
          {"exc", r.exc},
          {"den", r.den},
          {"gdes", r.gdes},
          {"gmaj", r.gmaj},
          {"gexc", r.gexc},
          {"gden", r.gden}}},
        {"sets",
         {{"descent_set", r.descent_set},
          {"gdes_set", r.gdes_set},
          {"inv_pairs", pairs_json(r.inv_pairs)},
          {"imv_pairs", pairs_json(r.imv_pairs)},
          {"ginv_pairs", pairs_json(r.ginv_pairs)},
          {"excedance_set", r.excedance_set},
          {"gexcedance_set", r.gexcedance_set},
          {"gexc_place_set", r.gexc_place_set},
          {"exc_subword", r.exc_subword.to_string()},
          {"nexc_subword", r.nexc_subword.to_string()},
          {"b_weights", r.b_weights}}}};

    output.csv_rows.push_back({"statistic", "value"});
    const std::vector<std::pair<std::string, long long>> scalars = {
        {"des", r.des},   {"maj", r.maj},   {"inv", r.inv},   {"imv", r.imv},
        {"exc", r.exc},   {"den", r.den},   {"gdes", r.gdes}, {"gmaj", r.gmaj},
        {"gexc", r.gexc}, {"gden", r.gden}};
    for (const auto& [name, value] : scalars)
        output.csv_rows.push_back({name, std::to_string(value)});

    std::ostringstream text;
    text << "word " << w.to_string() << " (g=" << g << ", l=" << l << ", h=" << h << ")\n";
    for (const auto& [name, value] : scalars) text << name << " " << value << "\n";
    text << "descent_set " << join_ints(r.descent_set) << "\n";
    text << "gdes_set " << join_ints(r.gdes_set) << "\n";
    text << "excedance_set " << join_ints(r.excedance_set) << "\n";
    text << "gexcedance_set " << join_ints(r.gexcedance_set) << "\n";
    text << "gexc_place_set " << join_ints(r.gexc_place_set) << "\n";
    text << "exc_subword " << (r.exc_subword.empty() ? "-" : r.exc_subword.to_string()) << "\n";
    text << "nexc_subword " << (r.nexc_subword.empty() ? "-" : r.nexc_subword.to_string())
         << "\n";
    text << "b_weights " << join_ints(r.b_weights) << "\n";
    output.text = text.str();

    output.emit("stats", out);
    return 0;
}

// ---------------------------------------------------------------------------
// dist

json poly_terms_json(const BivarPoly& poly) {
    json arr = json::array();
    for (const auto& [key, c] : poly.terms())
        arr.push_back({{"t", key.first}, {"q", key.second}, {"c", c}});
    return arr;
}

int cmd_dist(const std::string& multiset_text, const std::string& t_text,
             const std::string& q_text, int threads, Output& output, std::ostream& out) {
    const Multiset m = Multiset::parse(multiset_text);
    const StatSpec t_stat = StatSpec::parse(t_text);
    const StatSpec q_stat = StatSpec::parse(q_text);
    const BivarPoly poly = joint_dist(m, t_stat, q_stat, threads);

    output.parameters = {{"multiset", m.to_string()},
                         {"t", t_stat.spelling},
                         {"q", q_stat.spelling},
                         {"threads", threads}};
    output.result = {{"polynomial", poly.to_string()},
                     {"terms", poly_terms_json(poly)},
                     {"total", poly.total()}};

    output.csv_rows.push_back({"t", "q", "coeff"});
    for (const auto& [key, c] : poly.terms())
        output.csv_rows.push_back(
            {std::to_string(key.first), std::to_string(key.second), std::to_string(c)});

    int max_t = 0, max_q = 0;
    for (const auto& [key, c] : poly.terms()) {
        max_t = std::max(max_t, key.first);
        max_q = std::max(max_q, key.second);
    }
    std::ostringstream text;
    text << "multiset " << m.to_string() << "\n";
    text << "t " << t_stat.spelling << "  q " << q_stat.spelling << "\n";
    text << "polynomial " << poly.to_string() << "\n";
    text << "total " << poly.total() << "\n";
    text << "grid t\\q";
    for (int q = 0; q <= max_q; ++q) text << " " << q;
    text << "\n";
    for (int t = 0; t <= max_t; ++t) {
        text << "t^" << t;
        for (int q = 0; q <= max_q; ++q) text << " " << poly.coeff(t, q);
        text << "\n";
    }
    output.text = text.str();

    output.emit("dist", out);
    return 0;
}

// ---------------------------------------------------------------------------
// table

const std::vector<std::string>& default_table_pairs() {
    static const std::vector<std::string> pairs = {
        "2des,2maj", "des:l=2,maj:l=2", "exc:l=2,den:h=2", "exc:l=2,den", "exc:l=2,den:h=3"};
    return pairs;
}

std::pair<StatSpec, StatSpec> parse_pair(const std::string& text) {
    const size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw parse_error("expected a pair 'spec,spec', got '" + text + "'");
    return {StatSpec::parse(text.substr(0, comma)), StatSpec::parse(text.substr(comma + 1))};
}

int cmd_table(const std::string& multiset_text, std::vector<std::string> pair_texts,
              Output& output, std::ostream& out) {
    const Multiset m = Multiset::parse(multiset_text);
    if (pair_texts.empty()) pair_texts = default_table_pairs();
    std::vector<std::pair<StatSpec, StatSpec>> pairs;
    for (const auto& text : pair_texts) pairs.push_back(parse_pair(text));

    output.parameters = {{"multiset", m.to_string()}, {"pairs", pair_texts}};

    std::vector<std::string> header{"word"};
    for (const auto& [a, b] : pairs) {
        header.push_back(a.spelling);
        header.push_back(b.spelling);
    }
    output.csv_rows.push_back(header);

    json rows = json::array();
    std::ostringstream text;
    for_each_word(m, [&](const Word& w) {
        std::vector<std::string> csv_row{w.to_string()};
        json values = json::array();
        text << w.to_string();
        for (const auto& [a, b] : pairs) {
            const long long va = a.value(w), vb = b.value(w);
            csv_row.push_back(std::to_string(va));
            csv_row.push_back(std::to_string(vb));
            values.push_back(json::array({va, vb}));
            text << " (" << va << "," << vb << ")";
        }
        text << "\n";
        output.csv_rows.push_back(csv_row);
        rows.push_back({{"word", w.to_string()}, {"values", values}});
    });
    output.result = {{"rows", rows}};
    output.text = text.str();

    output.emit("table", out);
    return 0;
}

// ---------------------------------------------------------------------------
// map

json trace_json(const MapTrace& trace) {
    json steps = json::array();
    for (size_t b = 0; b < trace.steps.size(); ++b) {
        const MapStep& s = trace.steps[b];
        steps.push_back({{"b", b},
                         {"word", s.word.empty() ? "" : s.word.to_string()},
                         {"labels", s.labels},
                         {"y", s.chosen_index},
                         {"consumed", s.consumed_label},
                         {"lambda", s.lambda_remaining}});
    }
    return steps;
}

void trace_text(std::ostringstream& text, const MapTrace& trace) {
    for (size_t b = 0; b < trace.steps.size(); ++b) {
        const MapStep& s = trace.steps[b];
        text << "step " << b << ": word=" << (s.word.empty() ? "-" : s.word.to_string())
             << " T=" << tuple_list(s.labels) << " y=" << s.chosen_index
             << " consumed=" << s.consumed_label << " lambda=" << tuple_list(s.lambda_remaining)
             << "\n";
    }
}

struct MapArgs {
    std::string name;
    std::string word;
    std::string lambda;
    int n_mult = 0;
    int c = -1;
    int n = 0; // 0: deduce from the word
    int g = 1;
    int l = 1;
    int h = 1;
    bool trace = false;
};

int cmd_map(const MapArgs& args, Output& output, std::ostream& out) {
    const Word w = Word::parse(args.word);
    const int n = args.n > 0 ? args.n : w.max_letter();

    output.parameters = {{"map", args.name}, {"word", w.to_string()},
                         {"g", args.g},      {"l", args.l},
                         {"h", args.h},      {"n", n}};
    std::ostringstream text;
    text << "map " << args.name << "\n" << "input " << w.to_string() << "\n";

    const auto emit_kv = [&](const std::string& key, const std::string& value) {
        output.result[key] = value;
        output.csv_rows.push_back({key, value});
        text << key << " " << value << "\n";
    };
    output.csv_rows.push_back({"key", "value"});

    if (args.name == "phi") {
        if (args.c < 0) throw precondition_error("phi requires --c");
        const Word u = phi(w, args.c, n, args.g, args.h);
        emit_kv("result", u.to_string());
    } else if (args.name == "psi") {
        const PsiResult r = psi(w, n, args.g, args.h);
        emit_kv("result", r.word.to_string());
        emit_kv("label", std::to_string(r.label));
    } else if (args.name == "phi-den" || args.name == "phi-maj") {
        if (args.n_mult < 1)
            throw precondition_error(args.name + " requires --n-mult (the multiplicity of n)");
        const Partition lambda = Partition::parse(args.lambda, args.n_mult, w.size());
        output.parameters["lambda"] = lambda.to_string();
        output.parameters["n_mult"] = args.n_mult;
        const MapTrace t = args.name == "phi-den" ? phi_den(w, lambda, args.g, args.h)
                                                  : phi_maj(w, lambda, args.g, args.l);
        emit_kv("result", t.result.to_string());
        if (args.trace) {
            output.result["trace"] = trace_json(t);
            trace_text(text, t);
        }
    } else if (args.name == "phi-den-inv" || args.name == "phi-maj-inv") {
        const InverseResult r = args.name == "phi-den-inv" ? phi_den_inverse(w, args.g, args.h)
                                                           : phi_maj_inverse(w, args.g, args.l);
        emit_kv("result", r.word.empty() ? "" : r.word.to_string());
        emit_kv("lambda", r.lambda.to_string());
        if (args.trace) {
            json steps = json::array();
            for (size_t b = 0; b < r.steps.size(); ++b) {
                steps.push_back({{"b", b},
                                 {"word", r.steps[b].word.to_string()},
                                 {"label", r.steps[b].label}});
                text << "step " << b << ": word=" << r.steps[b].word.to_string()
                     << " label=" << r.steps[b].label << "\n";
            }
            output.result["trace"] = steps;
        }
    } else {
        throw parse_error("unknown map '" + args.name + "'");
    }

    output.text = text.str();
    output.emit("map", out);
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::string claim;
    std::string multiset;
    int n = 0;
    int k = 0;
    std::vector<int> g{1};
    std::vector<int> l{1};
    std::vector<int> h{1};
    std::string pair_a;
    std::string pair_b;
    int threads = 1;
    bool timing = false;
};

json report_json(const Report& r, bool timing) {
    json doc = {{"claim", r.claim},
                {"params", r.params},
                {"instances", r.instances},
                {"outcome", r.pass ? "pass" : "fail"},
                {"counterexample", r.counterexample}};
    if (timing) doc["elapsed_ms"] = r.elapsed_ms;
    return doc;
}

int cmd_verify(const VerifyArgs& args, Output& output, std::ostream& out) {
    std::vector<Report> reports;

    const auto sweep = [&](const std::function<void(int, int, int)>& fn, bool uses_l,
                           bool uses_h) {
        for (int g : args.g)
            for (int l : uses_l ? args.l : std::vector<int>{1})
                for (int h : uses_h ? args.h : std::vector<int>{1}) fn(g, l, h);
    };

    if (args.claim == "den-r-h") {
        const Multiset m = Multiset::parse(args.multiset);
        sweep([&](int g, int l, int h) { reports.push_back(check_den_r_h(m, g, l, h, args.threads)); },
              true, true);
    } else if (args.claim == "regular") {
        int n = args.n, k = args.k;
        if (!args.multiset.empty()) {
            const Multiset m = Multiset::parse(args.multiset);
            n = m.largest_letter();
            k = m.multiplicity(1);
            for (int v = 1; v <= n; ++v)
                if (m.multiplicity(v) != k)
                    throw precondition_error("regular requires a uniform multiset {1^k..n^k}");
        }
        sweep([&](int g, int l, int h) { reports.push_back(check_regular(n, k, g, l, h, args.threads)); },
              true, true);
    } else if (args.claim == "mahonian") {
        const Multiset m = Multiset::parse(args.multiset);
        sweep([&](int g, int, int h) { reports.push_back(check_mahonian(m, g, h, args.threads)); },
              false, true);
    } else if (args.claim == "bij-den") {
        const Multiset m = Multiset::parse(args.multiset);
        sweep([&](int g, int l, int h) { reports.push_back(check_bijection_den(m, g, h, l)); },
              true, true);
    } else if (args.claim == "bij-maj") {
        const Multiset m = Multiset::parse(args.multiset);
        sweep([&](int g, int l, int) { reports.push_back(check_bijection_maj(m, g, l)); }, true,
              false);
    } else if (args.claim == "phi-psi") {
        const Multiset m = Multiset::parse(args.multiset);
        const int n = args.n > 0 ? args.n : m.largest_letter();
        sweep([&](int g, int, int h) { reports.push_back(check_phi_psi(m, n, g, h)); }, false,
              true);
    } else if (args.claim == "equi") {
        const Multiset m = Multiset::parse(args.multiset);
        if (args.pair_a.empty() || args.pair_b.empty())
            throw precondition_error("equi requires --a and --b statistic pairs");
        reports.push_back(check_equidistribution(m, parse_pair(args.pair_a),
                                                 parse_pair(args.pair_b), args.threads));
    } else {
        throw parse_error("unknown claim '" + args.claim + "'");
    }

    bool all_pass = true;
    long long instances = 0;
    json report_array = json::array();
    output.csv_rows.push_back({"claim", "params", "instances", "outcome", "counterexample"});
    std::ostringstream text;
    for (const Report& r : reports) {
        all_pass = all_pass && r.pass;
        instances += r.instances;
        report_array.push_back(report_json(r, args.timing));
        output.csv_rows.push_back({r.claim, r.params, std::to_string(r.instances),
                                   r.pass ? "pass" : "fail", r.counterexample});
        text << (r.pass ? "PASS" : "FAIL") << " " << r.claim << " " << r.params << " instances="
             << r.instances;
        if (args.timing) text << " elapsed_ms=" << r.elapsed_ms;
        text << "\n";
        if (!r.pass) text << "  counterexample: " << r.counterexample << "\n";
    }

    output.parameters = {{"claim", args.claim}, {"threads", args.threads}};
    if (!args.multiset.empty()) output.parameters["multiset"] = args.multiset;
    if (args.claim == "regular") {
        output.parameters["n"] = args.n;
        output.parameters["k"] = args.k;
    }
    output.result = {{"outcome", all_pass ? "pass" : "fail"},
                     {"instances", instances},
                     {"reports", report_array}};
    output.text = text.str();

    output.emit("verify", out);
    return all_pass ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mahonian statistics on multiset permutations"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    // stats
    auto* stats = app.add_subcommand("stats", "Statistics of one word");
    std::string stats_word;
    int stats_g = 1, stats_l = 1, stats_h = 1;
    stats->add_option("--word", stats_word, "Word (digits or comma form)")->required();
    stats->add_option("--g", stats_g, "Gap");
    stats->add_option("--l", stats_l, "Level for gdes/gmaj/gexc");
    stats->add_option("--h", stats_h, "Level for gden");

    // dist
    auto* dist = app.add_subcommand("dist", "Joint distribution polynomial over S_M");
    std::string dist_multiset, dist_t, dist_q;
    int dist_threads = 0;
    dist->add_option("--multiset", dist_multiset, "Multiset (1:1,2:2 or 1,2,2)")->required();
    dist->add_option("--t", dist_t, "Statistic marked by t")->required();
    dist->add_option("--q", dist_q, "Statistic marked by q")->required();
    dist->add_option("--threads", dist_threads, "Worker threads (0 = auto)");

    // table
    auto* table = app.add_subcommand("table", "Per-word statistic table over S_M");
    std::string table_multiset;
    std::vector<std::string> table_pairs;
    table->add_option("--multiset", table_multiset, "Multiset")->required();
    table->add_option("--pair", table_pairs, "Statistic pair 'spec,spec' (repeatable)");

    // map
    auto* map = app.add_subcommand("map", "Apply an insertion map or its inverse");
    MapArgs map_args;
    map->add_option("name", map_args.name, "phi | psi | phi-den | phi-den-inv | phi-maj | phi-maj-inv")
        ->required();
    map->add_option("--word", map_args.word, "Input word")->required();
    map->add_option("--lambda", map_args.lambda, "Partition parts, e.g. 9,9,5,4");
    map->add_option("--n-mult", map_args.n_mult, "Multiplicity of the inserted largest letter");
    map->add_option("--c", map_args.c, "Label consumed by phi");
    map->add_option("--n", map_args.n, "Largest letter (default: largest letter of the word)");
    map->add_option("--g", map_args.g, "Gap");
    map->add_option("--l", map_args.l, "Level for the maj side");
    map->add_option("--h", map_args.h, "Level for the den side");
    map->add_flag("--trace", map_args.trace, "Include the per-step trace");

    // verify
    auto* verify = app.add_subcommand("verify", "Run an exhaustive desk-scale check");
    VerifyArgs verify_args;
    int verify_threads = 0;
    verify->add_option("claim", verify_args.claim,
                       "den-r-h | regular | mahonian | bij-den | bij-maj | phi-psi | equi")
        ->required();
    verify->add_option("--multiset", verify_args.multiset, "Multiset");
    verify->add_option("--n", verify_args.n, "Largest letter (regular, phi-psi)");
    verify->add_option("--k", verify_args.k, "Uniform multiplicity (regular)");
    verify->add_option("--g", verify_args.g, "Gap values (comma list)")->delimiter(',');
    verify->add_option("--l", verify_args.l, "Level values (comma list)")->delimiter(',');
    verify->add_option("--h", verify_args.h, "Denert level values (comma list)")->delimiter(',');
    verify->add_option("--a", verify_args.pair_a, "First statistic pair (equi)");
    verify->add_option("--b", verify_args.pair_b, "Second statistic pair (equi)");
    verify->add_option("--threads", verify_threads, "Worker threads (0 = auto)");
    verify->add_flag("--timing", verify_args.timing, "Include elapsed times in the output");

    std::vector<const char*> argv;
    argv.push_back("mahonia");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Output output;
    output.format = format;

    try {
        if (stats->parsed()) return cmd_stats(stats_word, stats_g, stats_l, stats_h, output, out);
        if (dist->parsed())
            return cmd_dist(dist_multiset, dist_t, dist_q, resolve_threads(dist_threads), output,
                            out);
        if (table->parsed()) return cmd_table(table_multiset, table_pairs, output, out);
        if (map->parsed()) return cmd_map(map_args, output, out);
        if (verify->parsed()) {
            verify_args.threads = resolve_threads(verify_threads);
            return cmd_verify(verify_args, output, out);
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        err << "error: precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}

} // namespace mahonia::cli
