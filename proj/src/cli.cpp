#include "revform/cli.hpp"

#include "revform/io.hpp"
#include "revform/kernels.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace revform::cli {

using io::json;

std::optional<Status> status_from_string(const std::string& s) {
    if (s == "unavoidable") return Status::unavoidable;
    if (s == "avoidable") return Status::avoidable;
    if (s == "unknown") return Status::unknown;
    return std::nullopt;
}

std::vector<CorpusEntry> read_corpus(std::istream& in) {
    std::vector<CorpusEntry> out;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + why);
        };
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            fail(std::string("malformed JSON: ") + e.what());
        }
        if (!j.is_object()) fail("expected a JSON object");
        CorpusEntry e;
        if (!j.contains("formula") || !j["formula"].is_string()) fail("missing string field \"formula\"");
        e.formula = j["formula"].get<std::string>();
        try {
            Formula::parse(e.formula);
        } catch (const ParseError& pe) {
            fail(pe.what());
        }
        if (j.contains("expected_status") && !j["expected_status"].is_null()) {
            if (!j["expected_status"].is_string()) fail("\"expected_status\" must be a string");
            e.expected_status = status_from_string(j["expected_status"].get<std::string>());
            if (!e.expected_status) fail("unknown expected_status '" + j["expected_status"].get<std::string>() + "'");
        }
        if (j.contains("tags")) {
            if (!j["tags"].is_array()) fail("\"tags\" must be an array");
            for (const auto& t : j["tags"]) {
                if (!t.is_string()) fail("tags must be strings");
                e.tags.push_back(t.get<std::string>());
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

struct Flags {
    std::size_t max_image_len = 16;
    std::uint64_t max_steps = 10'000'000;
    std::size_t alphabet_size = 5;
    std::size_t max_word_len = 50;
    std::size_t witness_prefix = 300;
    std::size_t witness_image_bound = 30;
    bool pretty = false;
    bool json_out = false;
    unsigned jobs = 0;

    SearchBudget budget() const { return {max_image_len, max_steps}; }
    DecideOptions decide_options() const {
        DecideOptions o;
        o.budget = budget();
        o.witness_prefix = witness_prefix;
        o.witness_image_bound = witness_image_bound;
        o.evidence_length = max_word_len;
        o.evidence_max_alphabet = alphabet_size;
        return o;
    }
};

void add_flags(CLI::App& app, Flags& f) {
    app.add_option("--max-image-len", f.max_image_len, "bound on image lengths in searches")->capture_default_str();
    app.add_option("--max-steps", f.max_steps, "step budget per search")->capture_default_str();
    app.add_option("--alphabet-size", f.alphabet_size, "alphabet size for oracle searches")->capture_default_str();
    app.add_option("--max-word-len", f.max_word_len, "word length for oracle searches")->capture_default_str();
    app.add_option("--witness-prefix", f.witness_prefix, "prefix length for witness checks")->capture_default_str();
    app.add_option("--witness-image-bound", f.witness_image_bound, "image bound for witness checks")
        ->capture_default_str();
    app.add_flag("--json", f.json_out, "JSON output (corpus prints a table otherwise)");
    app.add_flag("--pretty", f.pretty, "indented JSON");
    app.add_option("--jobs", f.jobs, "worker threads (0 = one per core)")->capture_default_str();
}

Formula parse_formula(const std::string& text) { return Formula::parse(text); }

int cmd_corpus(const std::string& path, const Flags& flags, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open " << path << "\n";
        return kUsage;
    }
    const auto entries = read_corpus(in);
    std::vector<Formula> formulas;
    for (const auto& e : entries) formulas.push_back(Formula::parse(e.formula));
    const auto verdicts = kernels::decide_batch(formulas, flags.decide_options(), flags.jobs);

    std::size_t mismatches = 0, unknown = 0;
    std::map<std::string, std::size_t> by_status;
    json rows = json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        const auto& v = verdicts[i];
        const bool mismatch = e.expected_status && *e.expected_status != v.status;
        mismatches += mismatch;
        unknown += v.status == Status::unknown;
        ++by_status[to_string(v.status)];
        json row{{"formula", e.formula},
                 {"status", to_string(v.status)},
                 {"certificate", to_string(v.certificate.kind)},
                 {"mismatch", mismatch},
                 {"tags", e.tags}};
        row["expected_status"] = e.expected_status ? json(to_string(*e.expected_status)) : json(nullptr);
        rows.push_back(std::move(row));
    }
    if (flags.json_out) {
        json j{{"entries", rows}, {"total", entries.size()}, {"mismatches", mismatches}, {"by_status", by_status}};
        out << io::dump(j, flags.pretty ? 2 : -1) << "\n";
    } else {
        out << std::left << std::setw(34) << "formula" << std::setw(13) << "expected" << std::setw(13) << "status"
            << "certificate\n";
        for (const auto& r : rows) {
            out << std::setw(34) << r["formula"].get<std::string>() << std::setw(13)
                << (r["expected_status"].is_null() ? "-" : r["expected_status"].get<std::string>()) << std::setw(13)
                << r["status"].get<std::string>() << r["certificate"].get<std::string>()
                << (r["mismatch"].get<bool>() ? "  MISMATCH" : "") << "\n";
        }
        out << "total " << entries.size() << ", unavoidable " << by_status["unavoidable"] << ", avoidable "
            << by_status["avoidable"] << ", unknown " << unknown << ", mismatches " << mismatches << "\n";
    }
    return mismatches ? kMismatch : kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Avoidability of patterns and formulas with reversal", "revform"};
    app.fallthrough();
    app.require_subcommand(1);
    Flags flags;
    add_flags(app, flags);

    std::string a, b, c;
    unsigned m = 0, n = 0;
    std::size_t q = 0, length = 0;

    auto* decide_cmd = app.add_subcommand("decide", "decide avoidability with a certificate");
    decide_cmd->add_option("formula", a, "formula, e.g. \"x y x~\"")->required();
    auto* divides_cmd = app.add_subcommand("divides", "search a division of phi into psi");
    divides_cmd->add_option("phi", a)->required();
    divides_cmd->add_option("psi", b)->required();
    auto* occurs_cmd = app.add_subcommand("occurs", "search an occurrence of phi in a word");
    occurs_cmd->add_option("phi", a)->required();
    occurs_cmd->add_option("word", b, "one glyph per letter")->required();
    auto* flatten_cmd = app.add_subcommand("flatten", "erase mirror marks");
    flatten_cmd->add_option("formula", a)->required();
    auto* reduce_cmd = app.add_subcommand("reduce", "free sets and a reduction chain of a reversal-free formula");
    reduce_cmd->add_option("formula", a)->required();
    auto* zimin_cmd = app.add_subcommand("zimin", "statistics of Z_{m,n}");
    zimin_cmd->add_option("m", m)->required();
    zimin_cmd->add_option("n", n)->required();
    auto* pf_cmd = app.add_subcommand("powerfree", "word over q letters with no alpha-power");
    pf_cmd->add_option("q", q)->required();
    pf_cmd->add_option("alpha", c, "rational such as 3/2")->required();
    pf_cmd->add_option("length", length)->required();
    auto* avoid_cmd = app.add_subcommand("avoid", "search a word avoiding a formula (--alphabet-size, --max-word-len)");
    avoid_cmd->add_option("formula", a)->required();
    auto* encounter_cmd =
        app.add_subcommand("encounter", "check that every word (--alphabet-size, --max-word-len) meets a formula");
    encounter_cmd->add_option("formula", a)->required();
    auto* probe_cmd = app.add_subcommand("probe", "delete two-way variables and decide the residual");
    probe_cmd->add_option("formula", a)->required();
    auto* corpus_cmd = app.add_subcommand("corpus", "decide every entry of a JSON-lines corpus");
    corpus_cmd->add_option("path", a)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (app.get_subcommands().empty() && !app.remaining().empty()) {
            err << "unknown subcommand '" << app.remaining().front() << "'\nRun with --help for more information.\n";
            return kUsage;
        }
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const int indent = flags.pretty ? 2 : -1;
    auto emit = [&](json j) { out << io::dump(std::move(j), indent) << "\n"; };
    try {
        if (*decide_cmd) {
            auto v = decide(parse_formula(a), flags.decide_options());
            emit(io::verdict_json(v));
            return v.status == Status::unknown ? kUnknown : kOk;
        }
        if (*divides_cmd) {
            auto phi = parse_formula(a), psi = parse_formula(b);
            auto j = io::search_json(divides(phi, psi, flags.budget()));
            j["phi"] = phi.str();
            j["psi"] = psi.str();
            emit(j);
        } else if (*occurs_cmd) {
            auto phi = parse_formula(a);
            auto w = Word::from_string(b);
            auto j = io::search_json(occurs(phi, w, flags.budget()));
            j["phi"] = phi.str();
            j["word"] = io::word_json(w);
            emit(j);
        } else if (*flatten_cmd) {
            auto phi = parse_formula(a);
            emit({{"formula", phi.str()}, {"flattened", flatten(phi).str()}});
        } else if (*reduce_cmd) {
            auto phi = parse_formula(a);
            if (phi.has_mirrors()) throw std::invalid_argument("reduce: formula must be reversal-free");
            auto chain = find_reduction(phi);
            json sets = json::array();
            for (const auto& s : free_sets(phi)) sets.push_back(s);
            emit({{"formula", phi.str()},
                  {"free_sets", sets},
                  {"reducible", chain.has_value()},
                  {"chain", chain ? io::chain_json(*chain) : json(nullptr)}});
        } else if (*zimin_cmd) {
            auto j = io::zimin_stats_json(zimin_stats(m, n));
            j["m"] = m;
            j["n"] = n;
            if (((std::uint64_t{m} + 1) << std::min(n, 30u)) <= 4096 && n <= 30) j["template"] = ZiminTemplate(m, n).str();
            const auto stats = zimin_stats(m, n);
            if (stats.fragment_count <= 64) {
                json frags = json::array();
                for (const auto& p : enumerate_fragments(m, n)) frags.push_back(p.str());
                j["fragment_list"] = frags;
            }
            emit(j);
        } else if (*pf_cmd) {
            const auto alpha = io::rational_from_string(c);
            OracleBudget ob;
            ob.max_nodes = flags.max_steps;
            auto r = generate_power_free(q, alpha, length, ob);
            auto j = io::generation_json(r);
            j["q"] = q;
            j["alpha"] = io::rational_json(alpha);
            if (r.word && !r.word->empty()) j["max_exponent"] = io::rational_json(max_exponent(*r.word));
            emit(j);
        } else if (*avoid_cmd) {
            auto phi = parse_formula(a);
            OracleBudget ob;
            ob.max_nodes = flags.max_steps;
            auto j = io::generation_json(search_avoiding_word(phi, flags.alphabet_size, flags.max_word_len, ob));
            j["formula"] = phi.str();
            j["alphabet_size"] = flags.alphabet_size;
            j["length"] = flags.max_word_len;
            emit(j);
        } else if (*encounter_cmd) {
            auto phi = parse_formula(a);
            const bool all = kernels::all_words_encounter(phi, flags.alphabet_size, flags.max_word_len);
            emit({{"formula", phi.str()},
                  {"alphabet_size", flags.alphabet_size},
                  {"length", flags.max_word_len},
                  {"all_encounter", all}});
        } else if (*probe_cmd) {
            emit(io::conjecture2_json(conjecture2_probe(parse_formula(a), flags.decide_options())));
        } else if (*corpus_cmd) {
            return cmd_corpus(a, flags, out, err);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUnknown;
    }
    return kOk;
}

}  // namespace revform::cli
