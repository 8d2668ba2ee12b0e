#include "gorlab/corpus.hpp"

#include <future>

#include <json.hpp>

namespace gorlab {
namespace cli {

namespace {

using json = nlohmann::ordered_json;

RingFileData ring_of(long long p, const std::vector<std::string>& vars,
                     const std::vector<std::string>& rels) {
    RingFileData rf;
    rf.characteristic = p;
    rf.rational = (p == 0);
    for (const auto& v : vars) rf.vars.push_back({v, 0, 0});
    for (const auto& r : rels) rf.rels.push_back({r, 0, 0});
    return rf;
}

CorpusCase mk(const std::string& name, RingFileData ring, CheckRequest req,
              const std::string& expect) {
    return CorpusCase{name, std::move(ring), std::move(req), expect};
}

CheckRequest cmd_elems(const std::string& command, const std::vector<std::string>& elems) {
    CheckRequest q;
    q.command = command;
    q.elements = elems;
    return q;
}

CheckRequest cmd_ideal(const std::string& command, const std::vector<std::string>& gens) {
    CheckRequest q;
    q.command = command;
    q.ideal = gens;
    return q;
}

}  // namespace

std::vector<CorpusCase> builtin_corpus() {
    std::vector<CorpusCase> out;
    auto dim8 = ring_of(101, {"x", "y", "z"}, {"x^2", "y^2+x*z", "z^2"});
    auto socle2 = ring_of(101, {"x", "y"}, {"x^2", "x*y", "y^2"});
    auto twovars = ring_of(101, {"x", "y"}, {});
    auto product = ring_of(101, {"x", "y"}, {"x*y"});
    auto coordaxes = ring_of(101, {"x", "y", "z"}, {"x*y", "x*z"});
    auto grid = ring_of(101, {"x", "y"}, {"x^2", "y^2"});

    out.push_back(mk("dim8-sequence-xyz-exact", dim8,
                     cmd_elems("check exact-sequence", {"x", "y", "z"}), "yes"));
    out.push_back(mk("dim8-sequence-yxz-not-exact", dim8,
                     cmd_elems("check exact-sequence", {"y", "x", "z"}), "no"));
    out.push_back(mk("dim8-gorenstein", dim8, cmd_elems("check gorenstein", {}), "yes"));
    out.push_back(mk("dim8-quasi-gorenstein-x", dim8,
                     cmd_ideal("check quasi-gorenstein", {"x"}), "yes"));
    out.push_back(mk("dim8-quasi-gorenstein-y", dim8,
                     cmd_ideal("check quasi-gorenstein", {"y"}), "no"));
    out.push_back(mk("dim8-augmentation-xyz", dim8,
                     cmd_elems("check koszul-augmentation", {"x", "y", "z"}), "yes"));
    out.push_back(mk("grid4-sequence-xy-exact", grid,
                     cmd_elems("check exact-sequence", {"x", "y"}), "yes"));
    out.push_back(mk("socle2-gorenstein", socle2, cmd_elems("check gorenstein", {}), "no"));
    out.push_back(mk("socle2-dual-extension", socle2,
                     cmd_elems("trivial-extension", {}), "yes"));
    out.push_back(mk("x2-xy-gorenstein", ring_of(101, {"x", "y"}, {"x^2", "x*y"}),
                     cmd_elems("check gorenstein", {}), "no"));
    out.push_back(mk("x2-xy-top-bottom-obstruction", twovars,
                     cmd_elems("check top-bottom", {"x^2", "x*y"}), "no"));
    out.push_back(mk("coord-axes-sequence-yz-not-exact", coordaxes,
                     cmd_elems("check exact-sequence", {"y", "z"}), "no"));
    out.push_back(mk("coord-axes-top-bottom-yz-passes", coordaxes,
                     cmd_elems("check top-bottom", {"y", "z"}), "yes"));
    out.push_back(mk("coord-axes-gorenstein", coordaxes,
                     cmd_elems("check gorenstein", {}), "no"));
    out.push_back(mk("product-relation-augmentation-x", product,
                     cmd_elems("check koszul-augmentation", {"x"}), "yes"));
    {
        CheckRequest q = cmd_elems("gp-checks", {"x"});
        q.module_ideal = {"x"};
        out.push_back(mk("product-relation-module-amplitudes", product, q, "yes"));
    }
    return out;
}

CorpusOutcome run_corpus(const std::vector<CorpusCase>& cases) {
    std::vector<std::future<CorpusRow>> futs;
    futs.reserve(cases.size());
    for (const auto& c : cases)
        futs.push_back(std::async(std::launch::async, [&c]() {
            CorpusRow row{c.name, c.expect, "", "", false};
            try {
                CommandResult r = c.ring.rational
                                      ? run_request(QField{}, c.ring, c.request)
                                      : run_request(FpField(c.ring.characteristic), c.ring,
                                                    c.request);
                row.verdict = r.verdict;
                row.note = r.certification;
            } catch (const std::exception& e) {
                row.verdict = "error";
                row.note = e.what();
            }
            row.agree = (row.verdict == c.expect);
            return row;
        }));

    CorpusOutcome out;
    for (auto& f : futs) {
        out.rows.push_back(f.get());
        if (!out.rows.back().agree) ++out.mismatches;
    }
    return out;
}

std::string corpus_to_json_text(const std::vector<CorpusCase>& cases) {
    json arr = json::array();
    for (const auto& c : cases) {
        json j;
        j["name"] = c.name;
        j["expect"] = c.expect;
        json ring;
        if (c.ring.rational)
            ring["field"] = "q";
        else
            ring["field"] = c.ring.characteristic;
        ring["vars"] = json::array();
        for (const auto& v : c.ring.vars) ring["vars"].push_back(v.text);
        ring["rels"] = json::array();
        for (const auto& r : c.ring.rels) ring["rels"].push_back(r.text);
        if (!c.ring.sequences.empty()) {
            json seqs;
            for (const auto& s : c.ring.sequences) {
                json elems = json::array();
                for (const auto& t : s.second) elems.push_back(t.text);
                seqs[s.first] = std::move(elems);
            }
            ring["sequences"] = std::move(seqs);
        }
        j["ring"] = std::move(ring);
        j["command"] = c.request.command;
        if (!c.request.elements.empty()) j["elements"] = c.request.elements;
        if (!c.request.sequence_name.empty()) j["sequence"] = c.request.sequence_name;
        if (!c.request.ideal.empty()) j["ideal"] = c.request.ideal;
        if (!c.request.second.empty()) j["second"] = c.request.second;
        if (!c.request.module_ideal.empty()) j["module_ideal"] = c.request.module_ideal;
        if (c.request.coefficients != "dual") j["coefficients"] = c.request.coefficients;
        if (c.request.size != 5) j["size"] = c.request.size;
        if (c.request.seed != 1) j["seed"] = c.request.seed;
        if (c.request.cutoff != 10) j["cutoff"] = c.request.cutoff;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

namespace {

std::vector<std::string> string_list(const json& j, const std::string& key) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw UsageError("corpus file: `" + key + "` must be an array");
    for (const auto& e : j[key]) {
        if (!e.is_string())
            throw UsageError("corpus file: entries of `" + key + "` must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

std::vector<CorpusCase> corpus_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("corpus file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw UsageError("corpus file must be a JSON array of cases");
    std::vector<CorpusCase> out;
    for (const auto& j : doc) {
        if (!j.is_object()) throw UsageError("corpus file: each case must be an object");
        CorpusCase c;
        if (!j.contains("name") || !j["name"].is_string())
            throw UsageError("corpus file: each case needs a string `name`");
        c.name = j["name"].get<std::string>();
        if (!j.contains("expect") || !j["expect"].is_string())
            throw UsageError("corpus case `" + c.name + "` needs a string `expect`");
        c.expect = j["expect"].get<std::string>();
        if (!j.contains("ring") || !j["ring"].is_object())
            throw UsageError("corpus case `" + c.name + "` needs a `ring` object");
        const json& ring = j["ring"];
        if (!ring.contains("field"))
            throw UsageError("corpus case `" + c.name + "` ring needs a `field`");
        if (ring["field"].is_string()) {
            auto f = ring["field"].get<std::string>();
            if (f != "q" && f != "Q" && f != "0")
                throw UsageError("corpus case `" + c.name + "`: field must be a prime or \"q\"");
            c.ring.rational = true;
            c.ring.characteristic = 0;
        } else if (ring["field"].is_number_integer()) {
            c.ring.characteristic = ring["field"].get<long long>();
            c.ring.rational = false;
        } else {
            throw UsageError("corpus case `" + c.name + "`: field must be a prime or \"q\"");
        }
        for (const auto& v : string_list(ring, "vars")) c.ring.vars.push_back({v, 0, 0});
        if (c.ring.vars.empty())
            throw UsageError("corpus case `" + c.name + "` ring needs `vars`");
        for (const auto& r : string_list(ring, "rels")) c.ring.rels.push_back({r, 0, 0});
        if (ring.contains("sequences")) {
            if (!ring["sequences"].is_object())
                throw UsageError("corpus case `" + c.name + "`: `sequences` must be an object");
            for (const auto& [k, v] : ring["sequences"].items()) {
                std::vector<TextToken> elems;
                for (const auto& e : v) elems.push_back({e.get<std::string>(), 0, 0});
                c.ring.sequences.emplace_back(k, std::move(elems));
            }
        }
        if (!j.contains("command") || !j["command"].is_string())
            throw UsageError("corpus case `" + c.name + "` needs a string `command`");
        c.request.command = j["command"].get<std::string>();
        c.request.elements = string_list(j, "elements");
        c.request.ideal = string_list(j, "ideal");
        c.request.second = string_list(j, "second");
        c.request.module_ideal = string_list(j, "module_ideal");
        if (j.contains("sequence")) c.request.sequence_name = j["sequence"].get<std::string>();
        if (j.contains("coefficients"))
            c.request.coefficients = j["coefficients"].get<std::string>();
        if (j.contains("size")) c.request.size = j["size"].get<int>();
        if (j.contains("seed")) c.request.seed = j["seed"].get<unsigned long long>();
        if (j.contains("cutoff")) c.request.cutoff = j["cutoff"].get<int>();
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace cli
}  // namespace gorlab
