#include "cli.hpp"

#include "aspectra/echelon.hpp"
#include "aspectra/error.hpp"
#include "aspectra/modular.hpp"
#include "aspectra/spectra.hpp"
#include "aspectra/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>

namespace aspectra::cli {

namespace {

struct RunConfig {
    int n = 2;
    std::string word;
    std::string form = "tilde";
    bool trace = false;
    std::string kind = "K";
    std::string rep;
    std::string rep1;
    std::string rep2;
    std::string method = "symbolic";
    std::size_t char_budget = 8;
    std::size_t trials = 4;
    std::uint64_t prime = modp::kMersenne61;
    std::size_t max_dim = 10;
    std::size_t max_vars = 10;
    std::uint64_t seed = 1;
    std::string suite = "all";
    std::string out_path;
    bool timings = false;
};

struct UsageError : Error {
    using Error::Error;
};

Json header(const std::string& command, Json config)
{
    return Json{{"version", kVersion}, {"command", command}, {"config", std::move(config)}};
}

ProbeSet probe_set(const RunConfig& c)
{
    if (c.kind == "K")
        return probe_set_K(c.n);
    if (c.kind == "scriptK")
        return probe_set_script_K(c.n);
    throw UsageError("unknown probe set '" + c.kind + "' (expected K or scriptK)");
}

Method method(const RunConfig& c)
{
    if (c.method == "symbolic")
        return Method::Symbolic;
    if (c.method == "pit")
        return Method::Pit;
    throw UsageError("unknown method '" + c.method + "' (expected symbolic or pit)");
}

Json trace_json(const MoveTrace& trace)
{
    Json steps = Json::array();
    for (const auto& [move, result] : trace.steps())
        steps.push_back(Json{{"move", describe_move(move, trace.initial().rank())}, {"result", render_word(result)}});
    return Json{{"initial", render_word(trace.initial())}, {"steps", steps}};
}

Json blocks_json(const std::vector<Block>& blocks)
{
    Json out = Json::array();
    for (const Block& b : blocks)
        out.push_back({b.start, b.end});
    return out;
}

int cmd_rewrite(const RunConfig& c, Json& doc)
{
    const Word word = parse_word(c.word, c.n);
    Json result;
    std::optional<MoveTrace> trace;
    if (c.form == "echelon" || c.form == "block") {
        if (!word.finite_alphabet())
            throw RankError("--form " + c.form + " takes words in a_1..a_n only");
        auto echelon = a_echelon_traced(word);
        if (c.form == "echelon") {
            result = Json{{"word", render_word(echelon.form.word())}, {"blocks", blocks_json(echelon.form.blocks())}};
            trace = std::move(echelon.trace);
        } else {
            auto block = block_echelon_traced(echelon.form);
            MoveTrace combined(word);
            for (const auto& step : echelon.trace.steps())
                combined.apply(step.first, letters_commute);
            for (const auto& step : block.trace.steps())
                combined.apply(step.first, letters_commute);
            result = Json{{"word", render_word(block.form.word())}, {"blocks", blocks_json(block.form.blocks())}};
            trace = std::move(combined);
        }
    } else if (c.form == "tilde") {
        auto tilde = tilde_echelon_traced(word);
        result = tilde.form.to_json();
        result["word"] = render_word(tilde.form.word());
        trace = std::move(tilde.trace);
    } else {
        throw UsageError("unknown form '" + c.form + "' (expected echelon, block or tilde)");
    }
    doc["result"] = result;
    if (c.trace)
        doc["trace"] = trace_json(*trace);
    return 0;
}

int cmd_probe(const RunConfig& c, Json& doc)
{
    doc["result"] = probe_set(c).to_json();
    return 0;
}

int cmd_spectrum(const RunConfig& c, Json& doc)
{
    const MatrixRep rho = parse_rep_spec(c.rep, c.n);
    const ProbeSet set = probe_set(c);
    if (method(c) == Method::Symbolic) {
        doc["result"] = pencil_divisor(rho, set, {c.max_dim, c.max_vars}).to_json();
        return 0;
    }
    // Without a symbolic polynomial, report det at seeded random points mod p.
    Rng rng(c.seed);
    const PolyMatrix m = pencil(rho, set);
    Json samples = Json::array();
    for (std::size_t t = 0; t < c.trials; ++t) {
        std::vector<std::uint64_t> point(set.words.size());
        for (auto& v : point)
            v = rng.below(c.prime);
        samples.push_back(Json{{"point", point}, {"det", det_mod(m, point, c.prime)}});
    }
    doc["result"] = Json{{"probeSet", set.tag()}, {"dim", rho.dim()}, {"prime", c.prime}, {"samples", samples}};
    return 0;
}

int cmd_compare(const RunConfig& c, Json& doc)
{
    const MatrixRep r1 = parse_rep_spec(c.rep1, c.n);
    const MatrixRep r2 = parse_rep_spec(c.rep2, c.n);
    VerifyConfig config;
    config.method = method(c);
    config.char_budget = c.char_budget;
    config.pit_trials = c.trials;
    config.pit_prime = c.prime;
    config.limits = {c.max_dim, c.max_vars};
    config.timings = c.timings;
    Rng rng(c.seed);
    const Report report = verify_character_determination(r1, r2, probe_set(c), config, rng);
    doc["result"] = report.to_json(c.timings);
    return report.consistent() ? 0 : 1;
}

int cmd_verify(const RunConfig& c, Json& doc)
{
    static const std::vector<std::string> known{"relations", "normality", "echelon",  "lemma21",
                                                "theorem52", "theorem32", "proofstep", "all"};
    if (std::find(known.begin(), known.end(), c.suite) == known.end())
        throw UsageError("unknown suite '" + c.suite + "'");
    const bool all = c.suite == "all";
    const std::vector<int> ranks{c.n};
    std::vector<SuiteResult> results;
    std::vector<PencilCheck> checks;
    PitSettings pit{c.trials, c.prime};
    if (all || c.suite == "relations")
        results.push_back(relations_suite(ranks));
    if (all || c.suite == "normality")
        results.push_back(normality_suite(ranks));
    if (all || c.suite == "echelon")
        results.push_back(echelon_suite(ranks, c.seed));
    if (all || c.suite == "lemma21")
        results.push_back(lemma21_suite(c.seed, 20, 4, &checks, pit));
    for (auto [name, kind] : {std::pair{"theorem52", ProbeKind::K}, std::pair{"theorem32", ProbeKind::ScriptK}}) {
        if (!all && c.suite != name)
            continue;
        Theorem52Options options;
        options.kind = kind;
        options.ranks = ranks;
        options.char_budget = c.char_budget;
        options.limits = {c.max_dim, c.max_vars};
        options.pit = pit;
        results.push_back(theorem52_suite(options, c.seed, &checks));
    }
    if (all || c.suite == "proofstep")
        results.push_back(proof_step_suite(ranks, c.seed));
    if (!checks.empty())
        results.push_back(pit_agreement_suite(checks));

    Json suites = Json::array();
    std::size_t violations = 0;
    bool critical = false;
    for (const auto& r : results) {
        suites.push_back(r.to_json());
        violations += r.violations.size();
        critical = critical || r.critical;
    }
    doc["result"] = Json{{"suites", suites}, {"violations", violations}, {"critical", critical}};
    return violations == 0 ? 0 : 1;
}

Json config_json(const std::string& command, const RunConfig& c)
{
    Json j{{"n", c.n}};
    if (command == "rewrite")
        j.update(Json{{"word", c.word}, {"form", c.form}, {"trace", c.trace}});
    if (command == "probe" || command == "spectrum" || command == "compare")
        j["set"] = c.kind;
    if (command == "spectrum")
        j["rep"] = c.rep;
    if (command == "compare")
        j.update(Json{{"rep1", c.rep1}, {"rep2", c.rep2}, {"charBudget", c.char_budget}});
    if (command == "verify")
        j.update(Json{{"suite", c.suite}, {"charBudget", c.char_budget}});
    if (command == "spectrum" || command == "compare" || command == "verify")
        j.update(Json{{"method", c.method},
                      {"pitTrials", c.trials},
                      {"pitPrime", c.prime},
                      {"maxDim", c.max_dim},
                      {"maxVars", c.max_vars},
                      {"seed", c.seed}});
    return j;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"Word rewriting, pencil determinants and character checks for affine type A"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", kVersion);

    auto common = [&c](CLI::App* sub) {
        sub->add_option("--n", c.n, "rank n >= 2")->required();
        sub->add_option("--out", c.out_path, "write JSON here instead of stdout");
    };
    auto numeric = [&c](CLI::App* sub) {
        sub->add_option("--method", c.method, "symbolic or pit")->capture_default_str();
        sub->add_option("--seed", c.seed, "seed for all randomness")->capture_default_str();
        sub->add_option("--trials", c.trials, "PIT trials")->capture_default_str();
        sub->add_option("--prime", c.prime, "PIT modulus")->capture_default_str();
        sub->add_option("--max-dim", c.max_dim, "symbolic limit on the dimension")->capture_default_str();
        sub->add_option("--max-vars", c.max_vars, "symbolic limit on the probe set size")->capture_default_str();
    };

    auto* rewrite = app.add_subcommand("rewrite", "normal form of a word");
    common(rewrite);
    rewrite->add_option("--word", c.word, "e.g. \"a1 a2 g1^-2\"")->required();
    rewrite->add_option("--form", c.form, "echelon, block or tilde")->capture_default_str();
    rewrite->add_flag("--trace", c.trace, "include every move");

    auto* probe = app.add_subcommand("probe", "list a probe set");
    common(probe);
    probe->add_option("--kind", c.kind, "K or scriptK")->capture_default_str();

    auto* spectrum = app.add_subcommand("spectrum", "pencil determinant of one representation");
    common(spectrum);
    spectrum->add_option("--rep", c.rep, "representation spec")->required();
    spectrum->add_option("--set", c.kind, "K or scriptK")->capture_default_str();
    numeric(spectrum);

    auto* compare = app.add_subcommand("compare", "divisors and characters of two representations");
    common(compare);
    compare->add_option("--rep1", c.rep1)->required();
    compare->add_option("--rep2", c.rep2)->required();
    compare->add_option("--set", c.kind, "K or scriptK")->capture_default_str();
    compare->add_option("--char-budget", c.char_budget, "word length for the character check")->capture_default_str();
    compare->add_flag("--timings", c.timings, "include wall-clock timings");
    numeric(compare);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify);
    verify->add_option("--suite", c.suite,
                       "relations, normality, echelon, lemma21, theorem52, theorem32, proofstep or all")
        ->capture_default_str();
    verify->add_option("--char-budget", c.char_budget, "word length for the character check")->capture_default_str();
    numeric(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << kVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    // K(3) has 12 words; the suites run it symbolically unless told otherwise
    if (verify->parsed() && verify->count("--max-vars") == 0)
        c.max_vars = 12;

    CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    Json doc = header(command, config_json(command, c));
    int code = 0;
    try {
        require_rank(c.n);
        if (command == "rewrite")
            code = cmd_rewrite(c, doc);
        else if (command == "probe")
            code = cmd_probe(c, doc);
        else if (command == "spectrum")
            code = cmd_spectrum(c, doc);
        else if (command == "compare")
            code = cmd_compare(c, doc);
        else
            code = cmd_verify(c, doc);
    } catch (const FeasibilityExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const std::string text = doc.dump(2) + "\n";
    if (c.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(c.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << c.out_path << '\n';
            return 2;
        }
        file << text;
    }
    return code;
}

} // namespace aspectra::cli
