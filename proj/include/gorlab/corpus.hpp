#pragma once

#include <string>
#include <vector>

#include "gorlab/driver.hpp"

namespace gorlab {
namespace cli {

// A regression case: a ring presentation, one command, and the verdict the
// run must reproduce.
struct CorpusCase {
    std::string name;
    RingFileData ring;
    CheckRequest request;
    std::string expect;  // yes | no | unknown | info
};

struct CorpusRow {
    std::string name;
    std::string expect;
    std::string verdict;  // what the engine said; "error" when it threw
    std::string note;     // error message or certification
    bool agree = false;
};

struct CorpusOutcome {
    std::vector<CorpusRow> rows;
    int mismatches = 0;

    bool vacuous() const { return rows.empty(); }
};

// The built-in regression suite.
std::vector<CorpusCase> builtin_corpus();

// Run cases in parallel (each case is an isolated pure computation); rows
// come back in input order.
CorpusOutcome run_corpus(const std::vector<CorpusCase>& cases);

// JSON (de)serialization of a case list, for external corpus files.
std::vector<CorpusCase> corpus_from_json_text(const std::string& text);
std::string corpus_to_json_text(const std::vector<CorpusCase>& cases);

}  // namespace cli
}  // namespace gorlab
