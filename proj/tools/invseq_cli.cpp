/*
 * invseq — command line front end for the inversion sequence toolkit.
 *
 * Subcommands: count, classify, verify, stats, sequence, fingerprint,
 * table. Every run prints one output record; with --format json (the
 * default) it is a JSON object with the fields
 *
 *   command     the subcommand that ran
 *   parameters  echo of the parsed inputs
 *   results     the command's payload
 *   status      the process exit code
 *   timing_ms   wall time of the computation
 *
 * and with --format csv the same record flattened to field,value rows.
 * The payload (command/parameters/results/status) is byte-identical
 * across runs with identical inputs; --jobs changes timing_ms and
 * nothing else.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage or parse
 * error, 3 resource limit exceeded.
 *
 * The data directory (bundled tables, label map, sequence database)
 * defaults to ./data, can be set with the INVSEQ_DATA environment
 * variable and overridden with --data.
 */

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "invseq/avoidance.hpp"
#include "invseq/bijections.hpp"
#include "invseq/classification.hpp"
#include "invseq/core.hpp"
#include "invseq/sequences.hpp"

namespace {

using invseq::BigInt;
using invseq::IntSeq;
using invseq::WordSet;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

// thrown when a request exceeds a configured size cap; maps to exit 3
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json big_json(const BigInt& v) {
    static const BigInt lim = BigInt(1) << 53;
    if (v < lim && v > -lim) return json(v.convert_to<long long>());
    return json(v.str());
}

json terms_json(const std::vector<BigInt>& terms) {
    json a = json::array();
    for (const BigInt& t : terms) a.push_back(big_json(t));
    return a;
}

std::string join_terms(const std::vector<BigInt>& terms) {
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ',';
        out += terms[i].str();
    }
    return out;
}

// Accepts a relation triple "(>,-,<=)" or a word list "210,100" / "011"
// and returns the raw forbidden word set; records canonical echoes.
WordSet parse_pattern_arg(const std::string& text, json& results) {
    if (text.find('(') != std::string::npos) {
        invseq::Triple t = invseq::parse_triple(text);
        WordSet w = invseq::triple_words(t);
        results["pattern"] = invseq::triple_name(t);
        results["words"] = invseq::word_set_to_string(w);
        return w;
    }
    WordSet w = invseq::parse_word_set(text);
    results["words"] = invseq::word_set_to_string(w);
    return w;
}

// Depth-first enumeration of I_n(w) with early pruning: a prefix that
// already realizes a forbidden order type is never extended.
template <typename Fn>
void for_each_avoider(int n, WordSet w, Fn&& fn) {
    IntSeq e;
    e.reserve(static_cast<size_t>(n));
    std::function<void()> rec = [&] {
        if (static_cast<int>(e.size()) == n) {
            fn(e);
            return;
        }
        int limit = static_cast<int>(e.size()) + 1;  // next value in 0..limit-1
        for (int v = 0; v < limit; ++v) {
            e.push_back(v);
            bool ok = true;
            int k = static_cast<int>(e.size()) - 1;
            for (int i = 0; i < k && ok; ++i)
                for (int j = i + 1; j < k && ok; ++j)
                    if (w & (WordSet{1} << invseq::order_type(e[i], e[j], e[k]))) ok = false;
            if (ok) rec();
            e.pop_back();
        }
    };
    rec();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string scalar_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void flatten_record(const json& j, const std::string& prefix,
                    std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten_record(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    } else if (j.is_array()) {
        bool scalars = true;
        for (const json& v : j)
            if (v.is_object() || v.is_array()) scalars = false;
        if (scalars) {
            std::string joined;
            for (size_t i = 0; i < j.size(); ++i) {
                if (i) joined += ';';
                joined += scalar_text(j[i]);
            }
            rows.emplace_back(prefix, joined);
        } else {
            for (size_t i = 0; i < j.size(); ++i)
                flatten_record(j[i], prefix + "." + std::to_string(i), rows);
        }
    } else {
        rows.emplace_back(prefix, scalar_text(j));
    }
}

// Prints the output record in the selected format and returns status.
int emit_record(const std::string& format, const std::string& command, json parameters,
                json results, int status, double timing_ms) {
    json rec;
    rec["command"] = command;
    rec["parameters"] = std::move(parameters);
    rec["results"] = std::move(results);
    rec["status"] = status;
    rec["timing_ms"] = timing_ms;
    if (format == "csv") {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten_record(rec, "", rows);
        std::cout << "field,value\n";
        for (const auto& [k, v] : rows) std::cout << csv_field(k) << ',' << csv_field(v) << '\n';
    } else {
        std::cout << rec.dump(2) << '\n';
    }
    return status;
}

json cell_json(const invseq::TableCell& c) {
    json j;
    j["row"] = c.row;
    j["field"] = c.field;
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

json table_results(const invseq::TableDiff& diff) {
    json results;
    results["table"] = diff.table;
    results["rows_checked"] = diff.rows_checked;
    results["clean"] = diff.clean();
    json mism = json::array();
    for (const auto& c : diff.mismatches) mism.push_back(cell_json(c));
    results["mismatches"] = std::move(mism);
    json err = json::array();
    for (const auto& c : diff.errata) err.push_back(cell_json(c));
    results["errata"] = std::move(err);
    return results;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "inversion sequence pattern toolkit: exhaustive avoider counts, the\n"
        "equivalence/Wilf classification of all 343 relation-triple patterns,\n"
        "structure-preserving maps, named counting sequences and a sequence\n"
        "fingerprint database.\n"};
    app.require_subcommand(1);

    int jobs = 1;
    std::string data_dir = "data";
    if (const char* env = std::getenv("INVSEQ_DATA")) data_dir = env;
    std::string format = "json";
    app.add_option("--jobs", jobs, "worker threads; changes wall time only, never printed numbers")
        ->check(CLI::PositiveNumber);
    app.add_option("--data", data_dir, "data directory (default: $INVSEQ_DATA or ./data)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.footer(
        "Exit codes: 0 success, 1 verification failure, 2 usage/parse error,\n"
        "3 resource limit exceeded.");

    int exit_code = kExitOk;

    // ---- count ---------------------------------------------------------
    struct {
        std::string pattern, words;
        int n = 7;
        int limit = 10;
    } count_o;
    CLI::App* count = app.add_subcommand(
        "count", "count the inversion sequences of lengths 1..n avoiding a pattern");
    count->add_option("pattern", count_o.pattern,
                      "relation triple like \"(-,>,-)\" or order-type words like \"011\"");
    count->add_option("--words", count_o.words, "forbidden order-type words, comma separated");
    count->add_option("--n", count_o.n, "maximum length (default 7)")->check(CLI::PositiveNumber);
    count->add_option("--limit", count_o.limit, "length cap (default 10)");
    count->fallthrough();
    count->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        if (count_o.pattern.empty() == count_o.words.empty())
            throw std::invalid_argument("give exactly one of a pattern argument or --words");
        if (count_o.n > count_o.limit)
            throw LimitError("n = " + std::to_string(count_o.n) + " exceeds the cap " +
                             std::to_string(count_o.limit) + " (raise with --limit)");
        json params;
        params["pattern"] = count_o.pattern;
        params["words"] = count_o.words;
        params["n"] = count_o.n;
        params["jobs"] = jobs;
        json results;
        WordSet w = count_o.words.empty() ? parse_pattern_arg(count_o.pattern, results)
                                          : parse_pattern_arg(count_o.words, results);
        std::vector<BigInt> terms = invseq::count_avoiders_lengths(count_o.n, w, jobs);
        results["n"] = count_o.n;
        results["terms"] = terms_json(terms);
        results["terms_text"] = join_terms(terms);
        results["value"] = big_json(terms.back());
        exit_code = emit_record(format, "count", std::move(params), std::move(results), kExitOk,
                                ms_since(t0));
    });

    // ---- classify ------------------------------------------------------
    struct {
        int max_n = 9;
        int limit = 9;
        std::string out;
    } classify_o;
    CLI::App* classify = app.add_subcommand(
        "classify", "partition all 343 patterns into equivalence and Wilf classes");
    classify->add_option("--max-n", classify_o.max_n,
                         "horizon for the Wilf grouping (default 9)")
        ->check(CLI::PositiveNumber);
    classify->add_option("--limit", classify_o.limit, "horizon cap (default 9)");
    classify->add_option("--out", classify_o.out, "also write the full report to this file");
    classify->fallthrough();
    classify->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        if (classify_o.max_n > classify_o.limit)
            throw LimitError("max-n = " + std::to_string(classify_o.max_n) + " exceeds the cap " +
                             std::to_string(classify_o.limit) + " (raise with --limit)");
        json params;
        params["max_n"] = classify_o.max_n;
        params["jobs"] = jobs;
        if (!classify_o.out.empty()) params["out"] = classify_o.out;

        const invseq::ClassificationReport rep = invseq::wilf_classes(classify_o.max_n, jobs);
        const auto& table = invseq::class_label_table();

        json results;
        results["equivalence_classes"] = rep.classes.size();
        results["wilf_classes"] = rep.wilf.size();
        results["horizon"] = rep.horizon;
        results["summary"] = std::to_string(rep.classes.size()) + " equivalence classes, " +
                             std::to_string(rep.wilf.size()) + " Wilf classes at n=" +
                             std::to_string(rep.horizon);
        if (!rep.warning.empty()) results["warning"] = rep.warning;

        int status = kExitOk;
        std::string labels_path = data_dir + "/labels.json";
        if (std::filesystem::exists(labels_path)) {
            try {
                invseq::load_label_map(labels_path);
                results["labels_file"] = "validated";
            } catch (const std::exception& ex) {
                results["labels_file"] = std::string("mismatch: ") + ex.what();
                status = kExitVerifyFail;
            }
        } else {
            results["labels_file"] = "absent";
        }

        json classes = json::array();
        for (size_t i = 0; i < rep.classes.size(); ++i) {
            const auto& c = rep.classes[i];
            json jc;
            jc["label"] = c.label;
            jc["representative"] = i < table.size() ? table[i].second
                                                    : invseq::triple_name(c.members.front());
            jc["size"] = c.members.size();
            jc["closure"] = invseq::word_set_to_string(c.closure);
            jc["counts"] = join_terms(c.counts);
            classes.push_back(std::move(jc));
        }
        results["classes"] = std::move(classes);

        json wilf = json::array();
        for (const auto& block : rep.wilf) {
            json jb;
            jb["counts"] = join_terms(block.counts);
            json labels = json::array();
            for (int ci : block.class_indices) labels.push_back(rep.classes[ci].label);
            jb["labels"] = std::move(labels);
            wilf.push_back(std::move(jb));
        }
        results["wilf"] = std::move(wilf);

        if (!classify_o.out.empty()) {
            std::ofstream out(classify_o.out);
            if (!out) throw std::runtime_error("cannot write " + classify_o.out);
            out << results.dump(2) << '\n';
        }
        exit_code = emit_record(format, "classify", std::move(params), std::move(results), status,
                                ms_since(t0));
    });

    // ---- stats ---------------------------------------------------------
    struct {
        std::string pattern, stat, joint;
        int n = 6;
        int limit = 10;
    } stats_o;
    CLI::App* stats = app.add_subcommand(
        "stats", "histogram of a statistic over the avoiders of a pattern");
    stats->add_option("pattern", stats_o.pattern, "relation triple or order-type words")
        ->required();
    stats->add_option("--n", stats_o.n, "sequence length (default 6)")
        ->check(CLI::PositiveNumber);
    stats->add_option("--stat", stats_o.stat,
                      "statistic: asc zeros dist repeats maxim maxx last lr_maxima")
        ->required();
    stats->add_option("--joint", stats_o.joint, "second statistic for a joint histogram");
    stats->add_option("--limit", stats_o.limit, "length cap (default 10)");
    stats->fallthrough();
    stats->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        if (!invseq::is_stat_name(stats_o.stat))
            throw std::invalid_argument("unknown statistic: '" + stats_o.stat + "'");
        if (!stats_o.joint.empty() && !invseq::is_stat_name(stats_o.joint))
            throw std::invalid_argument("unknown statistic: '" + stats_o.joint + "'");
        if (stats_o.n > stats_o.limit)
            throw LimitError("n = " + std::to_string(stats_o.n) + " exceeds the cap " +
                             std::to_string(stats_o.limit) + " (raise with --limit)");
        json params;
        params["pattern"] = stats_o.pattern;
        params["n"] = stats_o.n;
        params["stat"] = stats_o.stat;
        if (!stats_o.joint.empty()) params["joint"] = stats_o.joint;
        params["jobs"] = jobs;

        json results;
        WordSet w = parse_pattern_arg(stats_o.pattern, results);
        results["n"] = stats_o.n;
        results["stat"] = stats_o.stat;
        if (!stats_o.joint.empty()) results["joint"] = stats_o.joint;

        json histogram = json::array();
        std::string keys_text, counts_text;
        BigInt total = 0;
        if (stats_o.joint.empty()) {
            std::map<int, BigInt> h;
            for_each_avoider(stats_o.n, w,
                             [&](const IntSeq& e) { ++h[invseq::stat_value(e, stats_o.stat)]; });
            for (const auto& [k, c] : h) {
                json row;
                row["key"] = k;
                row["count"] = big_json(c);
                histogram.push_back(std::move(row));
                if (!keys_text.empty()) keys_text += ',';
                keys_text += std::to_string(k);
                if (!counts_text.empty()) counts_text += ',';
                counts_text += c.str();
                total += c;
            }
        } else {
            std::map<std::pair<int, int>, BigInt> h;
            for_each_avoider(stats_o.n, w, [&](const IntSeq& e) {
                ++h[{invseq::stat_value(e, stats_o.stat), invseq::stat_value(e, stats_o.joint)}];
            });
            for (const auto& [k, c] : h) {
                json row;
                row["key"] = json::array({k.first, k.second});
                row["count"] = big_json(c);
                histogram.push_back(std::move(row));
                if (!keys_text.empty()) keys_text += ',';
                keys_text += std::to_string(k.first) + ':' + std::to_string(k.second);
                if (!counts_text.empty()) counts_text += ',';
                counts_text += c.str();
                total += c;
            }
        }
        results["histogram"] = std::move(histogram);
        results["keys"] = keys_text;
        results["counts"] = counts_text;
        results["total"] = big_json(total);
        exit_code = emit_record(format, "stats", std::move(params), std::move(results), kExitOk,
                                ms_since(t0));
    });

    // ---- sequence ------------------------------------------------------
    struct {
        std::string name;
        int n = 0;
    } seq_o;
    CLI::App* sequence = app.add_subcommand(
        "sequence", "terms a_1..a_N of a registered counting sequence");
    sequence->add_option("name", seq_o.name, "registered sequence name, e.g. semi_baxter")
        ->required();
    sequence->add_option("N", seq_o.n, "number of terms")->required()->check(CLI::PositiveNumber);
    sequence->fallthrough();
    sequence->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        json params;
        params["name"] = seq_o.name;
        params["N"] = seq_o.n;
        std::vector<BigInt> terms = invseq::known_sequence(seq_o.name, seq_o.n);
        json results;
        results["name"] = seq_o.name;
        results["N"] = seq_o.n;
        results["terms"] = terms_json(terms);
        results["terms_text"] = join_terms(terms);
        results["value"] = big_json(terms.back());
        exit_code = emit_record(format, "sequence", std::move(params), std::move(results), kExitOk,
                                ms_since(t0));
    });

    // ---- fingerprint ---------------------------------------------------
    struct {
        std::string pattern, db;
        int n = 8;
        int limit = 10;
    } fp_o;
    CLI::App* fingerprint = app.add_subcommand(
        "fingerprint", "match a pattern's counting sequence against the bundled database");
    fingerprint->add_option("pattern", fp_o.pattern, "relation triple or order-type words")
        ->required();
    fingerprint->add_option("n", fp_o.n, "number of terms to count (default 8, at least 5)");
    fingerprint->add_option("--db", fp_o.db, "sequence database (default <data>/sequences.json)");
    fingerprint->add_option("--limit", fp_o.limit, "length cap (default 10)");
    fingerprint->fallthrough();
    fingerprint->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        if (fp_o.n > fp_o.limit)
            throw LimitError("n = " + std::to_string(fp_o.n) + " exceeds the cap " +
                             std::to_string(fp_o.limit) + " (raise with --limit)");
        std::string db_path = fp_o.db.empty() ? data_dir + "/sequences.json" : fp_o.db;
        json params;
        params["pattern"] = fp_o.pattern;
        params["n"] = fp_o.n;
        params["db"] = db_path;
        params["jobs"] = jobs;

        json results;
        WordSet w = parse_pattern_arg(fp_o.pattern, results);
        std::vector<BigInt> terms = invseq::count_avoiders_lengths(fp_o.n, w, jobs);
        results["n"] = fp_o.n;
        results["terms_text"] = join_terms(terms);

        std::vector<invseq::KnownSequenceEntry> db = invseq::load_sequence_db(db_path);
        std::vector<invseq::KnownSequenceEntry> hits = invseq::fingerprint(terms, db);
        json matches = json::array();
        std::string ids;
        for (const auto& entry : hits) {
            size_t start = 0;
            for (size_t s = 0; s + terms.size() <= entry.terms.size(); ++s) {
                bool eq = true;
                for (size_t i = 0; i < terms.size() && eq; ++i)
                    eq = entry.terms[s + i] == terms[i];
                if (eq) {
                    start = s;
                    break;
                }
            }
            json m;
            m["id"] = entry.id;
            m["description"] = entry.description;
            // index of the entry term matching a_1, in the entry's own
            // offset convention
            m["aligned_at"] = entry.offset + static_cast<int>(start);
            matches.push_back(std::move(m));
            if (!ids.empty()) ids += ',';
            ids += entry.id;
        }
        results["matches"] = std::move(matches);
        results["ids"] = ids;
        results["match_count"] = hits.size();
        exit_code = emit_record(format, "fingerprint", std::move(params), std::move(results),
                                kExitOk, ms_since(t0));
    });

    // ---- verify --------------------------------------------------------
    struct {
        std::string bijection;
        int n = 7;
        int table = 0;
        bool all = false;
        int limit = 10;
    } verify_o;
    CLI::App* verify = app.add_subcommand(
        "verify", "check a structure-preserving map, a bundled table, or everything");
    verify->add_option("--bijection", verify_o.bijection,
                       "map name: theta invcode phi alpha beta map_772 map_2958D "
                       "zero_repeats prefix_zero");
    verify->add_option("--n", verify_o.n, "length for map checks (default 7)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--table", verify_o.table, "bundled table to reproduce: 1, 2 or 3");
    verify->add_flag("--all", verify_o.all, "run every module invariant");
    verify->add_option("--limit", verify_o.limit, "length cap for map checks (default 10)");
    verify->fallthrough();
    verify->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        int modes = (!verify_o.bijection.empty() ? 1 : 0) + (verify_o.table != 0 ? 1 : 0) +
                    (verify_o.all ? 1 : 0);
        if (modes != 1)
            throw std::invalid_argument(
                "give exactly one of --bijection NAME, --table K or --all");
        json params;
        params["jobs"] = jobs;

        if (!verify_o.bijection.empty()) {
            if (verify_o.n > verify_o.limit)
                throw LimitError("n = " + std::to_string(verify_o.n) + " exceeds the cap " +
                                 std::to_string(verify_o.limit) + " (raise with --limit)");
            params["bijection"] = verify_o.bijection;
            params["n"] = verify_o.n;
            invseq::BijectionReport rep = invseq::verify_bijection(verify_o.bijection, verify_o.n);
            json results;
            results["name"] = rep.name;
            results["n"] = rep.n;
            results["pass"] = rep.pass;
            results["preserved_statistics"] = rep.preserved_statistics;
            if (!rep.detail.empty()) results["detail"] = rep.detail;
            int status = rep.pass ? kExitOk : kExitVerifyFail;
            exit_code = emit_record(format, "verify", std::move(params), std::move(results),
                                    status, ms_since(t0));
            return;
        }

        if (verify_o.table != 0) {
            if (verify_o.table < 1 || verify_o.table > 3)
                throw std::invalid_argument("table must be 1, 2 or 3");
            params["table"] = verify_o.table;
            invseq::TableDiff diff = invseq::reproduce_table(verify_o.table, data_dir, jobs);
            json results = table_results(diff);
            int status = diff.clean() ? kExitOk : kExitVerifyFail;
            exit_code = emit_record(format, "verify", std::move(params), std::move(results),
                                    status, ms_since(t0));
            return;
        }

        // --all: the union of the module invariants
        params["all"] = true;
        json checks = json::array();
        int failed = 0;
        auto add_check = [&](const std::string& name, bool pass, const std::string& detail) {
            json c;
            c["check"] = name;
            c["pass"] = pass;
            if (!detail.empty()) c["detail"] = detail;
            checks.push_back(std::move(c));
            if (!pass) ++failed;
        };

        for (const std::string& name : invseq::bijection_names()) {
            invseq::BijectionReport rep = invseq::verify_bijection(name, 7);
            add_check("bijection:" + name + ":n=7", rep.pass, rep.pass ? "" : rep.detail);
        }
        for (int which = 1; which <= 3; ++which) {
            invseq::TableDiff diff = invseq::reproduce_table(which, data_dir, jobs);
            std::string detail = std::to_string(diff.rows_checked) + " rows, " +
                                 std::to_string(diff.mismatches.size()) + " mismatches, " +
                                 std::to_string(diff.errata.size()) + " recorded errata";
            if (!diff.clean())
                detail += "; first mismatch: " + diff.mismatches.front().row + "/" +
                          diff.mismatches.front().field + " expected " +
                          diff.mismatches.front().expected + " got " +
                          diff.mismatches.front().actual;
            add_check("table:" + std::to_string(which), diff.clean(), detail);
        }
        {
            const invseq::ClassificationReport rep = invseq::wilf_classes(9, jobs);
            add_check("equivalence:97-classes", rep.classes.size() == 97,
                      std::to_string(rep.classes.size()) + " classes");
            add_check("wilf:63-classes-at-n9", rep.wilf.size() == 63,
                      std::to_string(rep.wilf.size()) + " Wilf classes");
        }
        {
            std::string labels_path = data_dir + "/labels.json";
            bool pass = false;
            std::string detail;
            try {
                auto pairs = invseq::load_label_map(labels_path);
                pass = true;
                detail = std::to_string(pairs.size()) + " labels validated";
            } catch (const std::exception& ex) {
                detail = ex.what();
            }
            add_check("labels:golden-map", pass, detail);
        }
        {
            auto constants = invseq::ultimately_constant_report(12, jobs);
            std::string got;
            for (const auto& c : constants) {
                if (!got.empty()) got += ',';
                got += c.label + "=" + c.stable_value.str();
            }
            add_check("constants:six-stable-classes",
                      got == "0A=0,0B=0,1=1,2A=2,2B=2,3=3", got);
        }

        json results;
        results["checks"] = std::move(checks);
        results["failed"] = failed;
        int status = failed == 0 ? kExitOk : kExitVerifyFail;
        exit_code = emit_record(format, "verify", std::move(params), std::move(results), status,
                                ms_since(t0));
    });

    // ---- table ---------------------------------------------------------
    struct {
        int which = 0;
    } table_o;
    CLI::App* table = app.add_subcommand(
        "table", "recompute a bundled summary table and diff it against the golden file");
    table->add_option("which", table_o.which, "table number: 1, 2 or 3")->required();
    table->fallthrough();
    table->callback([&] {
        auto t0 = std::chrono::steady_clock::now();
        if (table_o.which < 1 || table_o.which > 3)
            throw std::invalid_argument("table must be 1, 2 or 3");
        json params;
        params["which"] = table_o.which;
        params["jobs"] = jobs;
        invseq::TableDiff diff = invseq::reproduce_table(table_o.which, data_dir, jobs);
        json results = table_results(diff);
        int status = diff.clean() ? kExitOk : kExitVerifyFail;
        exit_code = emit_record(format, "table", std::move(params), std::move(results), status,
                                ms_since(t0));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const LimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return exit_code;
}
