/*
 * classification.hpp
 *
 * Grouping the 343 relation-triple patterns by their avoidance behavior.
 * Two patterns are equivalent when they admit exactly the same avoiders at
 * every length; they are Wilf-equivalent when their counting sequences
 * agree. Equivalence is decided exactly, by closing forbidden word sets
 * under a table of proved containment implications; Wilf grouping is
 * decided empirically up to a configurable horizon. The module also names
 * every class, reproduces the three bundled summary tables against fresh
 * computation, and isolates the classes whose counting sequences are
 * ultimately constant.
 */

#pragma once

#include <array>
#include <string>
#include <vector>

#include "invseq/avoidance.hpp"
#include "invseq/core.hpp"

namespace invseq {

// clauses[w] lists witness clauses for word w: every inversion sequence
// containing w contains at least one word of each clause. Words whose
// occurrences can stand alone (000 001 010 011 012 have single-word
// witnesses like (0,1,1)) have empty lists.
const std::array<std::vector<WordSet>, kWordCount>& word_implication_clauses();

// Adds to w every word that cannot occur in any sequence avoiding w (some
// clause of the word lies inside w), iterated to a fixed point. Two word
// sets admit the same avoiders at every length if and only if their closed
// sets are equal, so closure equality decides pattern equivalence.
WordSet closed_word_set(WordSet w);
WordSet closed_triple_words(const Triple& t);

// One equivalence class of patterns.
struct EquivalenceClass {
    WordSet closure = 0;          // the shared closed word set
    std::vector<Triple> members;  // in all_triples() order
    std::string label;            // curated name, e.g. "429A"
    std::vector<BigInt> counts;   // a_1..a_horizon; empty until Wilf grouping runs
};

// One Wilf class: equivalence classes whose counting sequences agree on
// a_1..a_horizon, referenced by index into ClassificationReport::classes.
struct WilfClass {
    std::vector<BigInt> counts;
    std::vector<int> class_indices;
};

struct ClassificationReport {
    std::vector<EquivalenceClass> classes;  // sorted by label (numeric, then letter)
    std::vector<WilfClass> wilf;            // sorted by counts, lexicographically
    int horizon = 0;                        // 0 = equivalence only
    std::string warning;                    // set when horizon differs from the default

    // Index into classes for a triple; -1 never happens for valid triples.
    int class_index(const Triple& t) const;
    const EquivalenceClass& class_of(const Triple& t) const;
};

// The curated (label, representative triple) list, one entry per class,
// ordered by label. Labels carry the length-7 count plus a disambiguating
// letter; the ultimately constant classes use their stable value instead
// ("0A".."3") and the unsatisfiable class is "5040" (= 7!).
const std::vector<std::pair<std::string, std::string>>& class_label_table();

// Partition of all 343 triples into equivalence classes, labeled. Runs in
// well under a second; no enumeration is involved.
ClassificationReport equivalence_classes();

// Equivalence partition plus counting sequences a_1..a_horizon and the Wilf
// grouping they induce. The published grouping uses horizon 9; any other
// horizon sets report.warning since blocks may merge (shorter) or split
// (longer) relative to that reference point.
ClassificationReport wilf_classes(int horizon = 9, int jobs = 1);

// Label of the class containing the triple, from the curated table.
std::string class_label(const Triple& t);

// A named structural predicate on inversion sequences (the characterization
// column of the first summary table). Throws std::invalid_argument for an
// unknown name.
bool structural_predicate(const std::string& name, const IntSeq& e);
bool is_structural_predicate(const std::string& name);

// One discrepancy (or recorded erratum) from a table reproduction.
struct TableCell {
    std::string row;       // class label
    std::string field;     // which column disagreed
    std::string expected;  // value stored in the golden file
    std::string actual;    // freshly computed value
    std::string note;
};

struct TableDiff {
    int table = 0;
    int rows_checked = 0;
    std::vector<TableCell> mismatches;  // genuine disagreements: must be empty
    std::vector<TableCell> errata;      // golden rows carrying a recorded erratum
    bool clean() const { return mismatches.empty(); }
};

// Recomputes every checkable cell of bundled table 1, 2 or 3 and diffs it
// against the golden file <data_dir>/tables/table<which>.json.
//   table 1: the 28 structurally characterized classes; each structural
//            predicate is verified to agree with pattern avoidance on all
//            of I_1..I_7, labels and length-7 counts are recomputed, and
//            registered counting sequences are matched through length 8.
//   table 2: the 52 classes with previously known counting sequences;
//            length-7 counts, word-set annotations and bundled sequence
//            prefixes (via <data_dir>/sequences.json) are recomputed.
//   table 3: the 34 classes with previously unknown counting sequences;
//            full count prefixes a_1..a_9 and word-set annotations are
//            recomputed.
// Golden rows may carry a "listed_*" field recording a value that appears
// in the source tables but contradicts the row's own pattern; such rows
// are reported under errata (and the recorded value is verified to still
// disagree, so stale errata surface as mismatches).
TableDiff reproduce_table(int which, const std::string& data_dir = "data", int jobs = 1);

// One ultimately constant counting sequence.
struct ConstantClassReport {
    std::string label;
    Triple representative;
    std::vector<BigInt> terms;  // a_1..a_horizon
    int stable_from = 0;        // least n with a_n = a_{n+1} = ... = a_horizon
    BigInt stable_value;
};

// The classes whose counting sequences stabilize: candidates are detected
// by a_9 <= a_8 (every growing class increases strictly there) and then
// confirmed by extending the count to the horizon. Exactly six classes
// qualify; they are returned in label order.
std::vector<ConstantClassReport> ultimately_constant_report(int horizon = 12, int jobs = 1);

// Reads a label map {canonical closed word-set string -> label} written by
// the data generator and verifies it against class_label_table(); returns
// the parsed map. Throws std::runtime_error on unreadable files.
std::vector<std::pair<std::string, std::string>> load_label_map(const std::string& path);

}  // namespace invseq
