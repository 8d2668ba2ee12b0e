#include "gorlab/ringfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace gorlab {

namespace {

bool is_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Whitespace-separated tokens with their 1-based columns; `#` starts a comment.
std::vector<TextToken> tokenize(const std::string& line, int lineno) {
    std::vector<TextToken> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), lineno, static_cast<int>(start) + 1});
    }
    return out;
}

// Split a token on commas, keeping the original position for each piece.
void split_commas(const TextToken& tok, std::vector<TextToken>& out) {
    size_t start = 0;
    for (size_t i = 0; i <= tok.text.size(); ++i) {
        if (i == tok.text.size() || tok.text[i] == ',') {
            if (i > start)
                out.push_back({tok.text.substr(start, i - start), tok.line,
                               tok.column + static_cast<int>(start)});
            start = i + 1;
        }
    }
}

}  // namespace

RingFileData parse_ring_text(const std::string& text) {
    RingFileData rf;
    bool saw_field = false, saw_vars = false;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line, lineno);
        if (toks.empty()) continue;
        const TextToken& head = toks[0];
        const std::string& d = head.text;

        if (d == "field") {
            if (saw_field) throw RingFileError(head.line, head.column, "duplicate `field` line");
            if (toks.size() != 2)
                throw RingFileError(head.line, head.column,
                                    "`field` takes one value: a prime or `q`");
            const TextToken& v = toks[1];
            if (v.text == "q" || v.text == "Q" || v.text == "0") {
                rf.rational = true;
                rf.characteristic = 0;
            } else {
                long long p = 0;
                try {
                    size_t used = 0;
                    p = std::stoll(v.text, &used);
                    if (used != v.text.size()) throw std::invalid_argument("");
                } catch (...) {
                    throw RingFileError(v.line, v.column,
                                        "field characteristic `" + v.text +
                                            "` is not a number (use a prime or `q`)");
                }
                if (p >= (1LL << 31))
                    throw RingFileError(v.line, v.column, "field characteristic too large");
                if (!is_prime(p))
                    throw RingFileError(v.line, v.column,
                                        "field characteristic " + v.text + " is not prime");
                rf.characteristic = p;
            }
            saw_field = true;
        } else if (d == "vars") {
            if (saw_vars) throw RingFileError(head.line, head.column, "duplicate `vars` line");
            if (toks.size() < 2)
                throw RingFileError(head.line, head.column, "`vars` needs at least one name");
            for (size_t i = 1; i < toks.size(); ++i) {
                std::vector<TextToken> pieces;
                split_commas(toks[i], pieces);
                for (auto& v : pieces) {
                    if (!is_ident(v.text))
                        throw RingFileError(v.line, v.column,
                                            "`" + v.text + "` is not a valid variable name");
                    for (const auto& seen : rf.vars)
                        if (seen.text == v.text)
                            throw RingFileError(v.line, v.column,
                                                "variable `" + v.text + "` declared twice");
                    rf.vars.push_back(std::move(v));
                }
            }
            saw_vars = true;
        } else if (d == "rels") {
            for (size_t i = 1; i < toks.size(); ++i) split_commas(toks[i], rf.rels);
        } else if (d == "rel") {
            // the rest of the line, spaces and all, is one polynomial
            size_t pos = line.find("rel");
            std::string rest = line.substr(pos + 3);
            if (auto h = rest.find('#'); h != std::string::npos) rest = rest.substr(0, h);
            size_t first = rest.find_first_not_of(" \t");
            if (first == std::string::npos)
                throw RingFileError(head.line, head.column, "`rel` needs a polynomial");
            size_t last = rest.find_last_not_of(" \t");
            rf.rels.push_back({rest.substr(first, last - first + 1), lineno,
                               static_cast<int>(pos + 3 + first) + 1});
        } else if (d == "seq") {
            if (toks.size() < 3)
                throw RingFileError(head.line, head.column,
                                    "`seq` needs a name and at least one element");
            const TextToken& name = toks[1];
            if (!is_ident(name.text))
                throw RingFileError(name.line, name.column,
                                    "`" + name.text + "` is not a valid sequence name");
            if (rf.find_sequence(name.text))
                throw RingFileError(name.line, name.column,
                                    "sequence `" + name.text + "` declared twice");
            std::vector<TextToken> elems;
            for (size_t i = 2; i < toks.size(); ++i) split_commas(toks[i], elems);
            rf.sequences.emplace_back(name.text, std::move(elems));
        } else {
            throw RingFileError(head.line, head.column,
                                "unknown directive `" + d +
                                    "` (expected field, vars, rels, rel, or seq)");
        }
    }

    if (!saw_field) throw RingFileError(lineno, 1, "missing `field` line");
    if (!saw_vars) throw RingFileError(lineno, 1, "missing `vars` line");
    return rf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw RingFileError(0, 0, "cannot read file `" + path + "`");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace gorlab
