#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gorlab/corpus.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace gorlab;
using namespace gorlab::cli;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            if (i > start) out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write output file `" + out_path + "`");
    f << text;
}

std::string render_result(const std::string& command, const std::string& case_label,
                          const CommandResult& r, const std::string& format,
                          bool timings, long long elapsed_ms) {
    if (format == "json") {
        json j;
        j["command"] = command;
        if (!case_label.empty()) j["case"] = case_label;
        j["verdict"] = r.verdict;
        j["criterion"] = r.criterion;
        j["certification"] = r.certification;
        json ev = json::array();
        for (const auto& kv : r.evidence) ev.push_back(json::array({kv.first, kv.second}));
        j["evidence"] = std::move(ev);
        if (timings) j["elapsed_ms"] = elapsed_ms;
        return j.dump(2) + "\n";
    }
    std::string s;
    s += "command: " + command + "\n";
    if (!case_label.empty()) s += "case: " + case_label + "\n";
    s += "verdict: " + r.verdict + "\n";
    s += "criterion: " + r.criterion + "\n";
    s += "certification: " + r.certification + "\n";
    if (!r.evidence.empty()) {
        s += "evidence:\n";
        for (const auto& kv : r.evidence) s += "  " + kv.first + ": " + kv.second + "\n";
    }
    if (timings) s += "elapsed_ms: " + std::to_string(elapsed_ms) + "\n";
    return s;
}

std::string render_corpus(const CorpusOutcome& o, const std::string& format, bool timings,
                          long long elapsed_ms) {
    if (format == "json") {
        json j;
        j["command"] = "corpus run";
        j["verdict"] = (o.mismatches == 0) ? "yes" : "no";
        j["mismatches"] = o.mismatches;
        if (o.vacuous()) j["warning"] = "the corpus is empty; the pass is vacuous";
        json rows = json::array();
        for (const auto& r : o.rows) {
            json c;
            c["case"] = r.name;
            c["expected"] = r.expect;
            c["verdict"] = r.verdict;
            c["agree"] = r.agree;
            c["note"] = r.note;
            rows.push_back(std::move(c));
        }
        j["cases"] = std::move(rows);
        if (timings) j["elapsed_ms"] = elapsed_ms;
        return j.dump(2) + "\n";
    }
    std::string s = "command: corpus run\n";
    s += std::string("verdict: ") + (o.mismatches == 0 ? "yes" : "no") + "\n";
    s += "mismatches: " + std::to_string(o.mismatches) + "\n";
    if (o.vacuous()) s += "warning: the corpus is empty; the pass is vacuous\n";
    for (const auto& r : o.rows)
        s += "  " + r.name + ": expected " + r.expect + ", got " + r.verdict +
             (r.agree ? "" : "  <-- MISMATCH") + "\n";
    if (timings) s += "elapsed_ms: " + std::to_string(elapsed_ms) + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision procedures for Gorenstein-theoretic properties of "
                 "finite-dimensional and graded local algebras"};
    app.require_subcommand(1);

    std::string ring_path, format = "json", out_path, case_label;
    bool timings = false;
    CheckRequest q;

    app.add_option("--ring", ring_path, "ring presentation file");
    app.add_option("--cutoff", q.cutoff, "resolution window for certified answers")
        ->capture_default_str();
    app.add_option("--format", format, "report rendering")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_option("--case", case_label, "label echoed into the report");
    app.add_flag("--timings", timings, "include elapsed time (breaks byte determinism)");

    std::string elements_csv, element_single, sequence_name, ideal_csv, with_csv, module_csv;

    struct Leaf {
        CLI::App* sub;
        std::string command;
    };
    std::vector<Leaf> leaves;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                    const std::string& command) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        sub->fallthrough();
        leaves.push_back({sub, command});
        return sub;
    };

    leaf(&app, "define", "parse a presentation and report the engine routing", "define");

    CLI::App* check = app.add_subcommand("check", "decide a property of the ring");
    check->fallthrough();
    check->require_subcommand(1);
    {
        auto* s = leaf(check, "exact-element", "is the element regular or an exact zero divisor",
                       "check exact-element");
        s->add_option("--element", element_single, "ring element")->required();
    }
    {
        auto* s = leaf(check, "ezd", "is the element an exact zero divisor", "check ezd");
        s->add_option("--element", element_single, "ring element")->required();
    }
    {
        auto* s = leaf(check, "exact-sequence", "is the sequence exact stage by stage",
                       "check exact-sequence");
        s->add_option("--elements", elements_csv, "comma-separated elements");
        s->add_option("--sequence", sequence_name, "named sequence from the ring file");
    }
    leaf(check, "gorenstein", "is the ring Gorenstein", "check gorenstein");
    {
        auto* s = leaf(check, "quasi-gorenstein",
                       "is the quotient map by the ideal quasi-Gorenstein",
                       "check quasi-gorenstein");
        s->add_option("--ideal", ideal_csv, "comma-separated ideal generators");
    }
    {
        auto* s = leaf(check, "koszul-augmentation",
                       "is the augmentation onto the Koszul degree-zero homology "
                       "quasi-Gorenstein",
                       "check koszul-augmentation");
        s->add_option("--elements", elements_csv, "comma-separated elements");
        s->add_option("--sequence", sequence_name, "named sequence from the ring file");
    }
    {
        auto* s = leaf(check, "top-bottom",
                       "does the top Koszul homology match the bottom as modules",
                       "check top-bottom");
        s->add_option("--elements", elements_csv, "comma-separated elements");
        s->add_option("--sequence", sequence_name, "named sequence from the ring file");
    }

    CLI::App* koszul = app.add_subcommand("koszul", "Koszul complex computations");
    koszul->fallthrough();
    koszul->require_subcommand(1);
    {
        auto* s = leaf(koszul, "homology", "homology of the Koszul complex on the elements",
                       "koszul homology");
        s->add_option("--elements", elements_csv, "comma-separated elements");
        s->add_option("--sequence", sequence_name, "named sequence from the ring file");
    }

    {
        auto* s = leaf(&app, "resolve",
                       "minimal free resolution of the quotient by the ideal "
                       "(default: the residue field)",
                       "resolve");
        s->add_option("--ideal", ideal_csv, "comma-separated ideal generators");
    }
    {
        auto* s = leaf(&app, "ext", "Ext of the quotient by the ideal against the ring", "ext");
        s->add_option("--ideal", ideal_csv, "comma-separated ideal generators");
    }
    {
        auto* s = leaf(&app, "tor", "Tor of two ideal quotients", "tor");
        s->add_option("--ideal", ideal_csv, "first ideal (default: the maximal ideal)");
        s->add_option("--with", with_csv, "second ideal (default: the maximal ideal)");
    }
    {
        auto* s = leaf(&app, "poincare", "Betti numbers of the quotient by the ideal "
                                         "(default: the residue field)",
                       "poincare");
        s->add_option("--ideal", ideal_csv, "comma-separated ideal generators");
    }
    {
        auto* s = leaf(&app, "bass", "Bass numbers of the quotient by the ideal "
                                     "(default: the ring)",
                       "bass");
        s->add_option("--ideal", ideal_csv, "comma-separated ideal generators");
    }
    {
        auto* s = leaf(&app, "pfaffian-ideal",
                       "submaximal pfaffians of a random alternating linear matrix",
                       "pfaffian-ideal");
        s->add_option("--size", q.size, "odd matrix size")->capture_default_str();
        s->add_option("--seed", q.seed, "randomness seed")->capture_default_str();
    }
    {
        auto* s = leaf(&app, "trivial-extension",
                       "square-zero extension of the ring by a coefficient module",
                       "trivial-extension");
        s->add_option("--coefficients", q.coefficients, "dual | self")->capture_default_str();
    }
    {
        auto* s = leaf(&app, "tensor-resolution",
                       "tensor of the resolutions of two nested ideal quotients",
                       "tensor-resolution");
        s->add_option("--ideal", ideal_csv, "smaller ideal");
        s->add_option("--with", with_csv, "larger ideal (must contain the smaller)");
    }
    {
        auto* s = leaf(&app, "gp-checks",
                       "amplitude and homology diagnostics for a module against a "
                       "Koszul complex",
                       "gp-checks");
        s->add_option("--elements", elements_csv, "comma-separated elements");
        s->add_option("--sequence", sequence_name, "named sequence from the ring file");
        s->add_option("--module-ideal", module_csv,
                      "the module is the quotient by these generators (default: the ring)");
    }

    CLI::App* corpus = app.add_subcommand("corpus", "built-in regression corpus");
    corpus->fallthrough();
    corpus->require_subcommand(1);
    std::string corpus_file;
    CLI::App* corpus_run = corpus->add_subcommand("run", "run the corpus; exit 3 on mismatch");
    corpus_run->fallthrough();
    corpus_run->add_option("--file", corpus_file, "JSON case file instead of the built-ins");
    CLI::App* corpus_emit =
        corpus->add_subcommand("emit", "print the built-in corpus as a JSON case file");
    corpus_emit->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        auto t0 = std::chrono::steady_clock::now();
        auto elapsed = [&]() {
            return std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                .count();
        };

        if (corpus_run->parsed()) {
            auto cases = corpus_file.empty()
                             ? builtin_corpus()
                             : corpus_from_json_text(read_text_file(corpus_file));
            auto outcome = run_corpus(cases);
            if (outcome.vacuous())
                std::cerr << "warning: the corpus is empty; the pass is vacuous\n";
            emit(render_corpus(outcome, format, timings, elapsed()), out_path);
            return outcome.mismatches == 0 ? 0 : 3;
        }
        if (corpus_emit->parsed()) {
            emit(corpus_to_json_text(builtin_corpus()), out_path);
            return 0;
        }

        const Leaf* chosen = nullptr;
        for (const auto& l : leaves)
            if (l.sub->parsed()) chosen = &l;
        if (!chosen) throw UsageError("no command given");

        q.command = chosen->command;
        q.sequence_name = sequence_name;
        if (!element_single.empty())
            q.elements = {element_single};
        else
            q.elements = split_csv(elements_csv);
        q.ideal = split_csv(ideal_csv);
        q.second = split_csv(with_csv);
        q.module_ideal = split_csv(module_csv);

        if (ring_path.empty()) throw UsageError("this command needs --ring <file>");
        RingFileData rf = parse_ring_text(read_text_file(ring_path));
        CommandResult r = rf.rational
                              ? run_request(QField{}, rf, q)
                              : run_request(FpField(rf.characteristic), rf, q);
        emit(render_result(q.command, case_label, r, format, timings, elapsed()), out_path);
        return 0;
    } catch (const RingFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return 2;
    }
}
