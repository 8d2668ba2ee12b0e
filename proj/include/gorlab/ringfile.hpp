#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gorlab {

// A token from a ring presentation file, remembering where it came from so
// later stages (polynomial parsing, engine routing) can point back at the
// offending spot.
struct TextToken {
    std::string text;
    int line = 0;    // 1-based; 0 for tokens built in memory
    int column = 0;  // 1-based byte offset
};

// Parsed contents of a ring presentation file:
//
//   # comment
//   field 101            (a prime, or `q` for the rationals)
//   vars x y z
//   rels x^2 y^2+x*z z^2 (whitespace/comma separated, no spaces inside)
//   rel y^2 + x*z        (one relation, spaces allowed)
//   seq cut x y z        (a named sequence of elements)
//
// The file syntax is validated here; the polynomials themselves are parsed
// later, against the declared variables.
struct RingFileData {
    long long characteristic = 0;  // 0 means the rationals
    bool rational = false;
    std::vector<TextToken> vars;
    std::vector<TextToken> rels;
    std::vector<std::pair<std::string, std::vector<TextToken>>> sequences;

    const std::vector<TextToken>* find_sequence(const std::string& name) const {
        for (const auto& s : sequences)
            if (s.first == name) return &s.second;
        return nullptr;
    }
};

class RingFileError : public std::runtime_error {
public:
    int line;
    int column;
    RingFileError(int l, int c, const std::string& msg)
        : std::runtime_error("ring file, line " + std::to_string(l) + ", column " +
                             std::to_string(c) + ": " + msg),
          line(l),
          column(c) {}
};

// Parse the text of a presentation file. Throws RingFileError with the line
// and column of the first problem.
RingFileData parse_ring_text(const std::string& text);

// Read a whole file; throws RingFileError (line 0) when it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace gorlab
