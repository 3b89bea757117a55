#include <istab/cli.hpp>
#include <istab/errors.hpp>
#include <istab/generator.hpp>
#include <istab/instance_io.hpp>
#include <istab/reductions.hpp>
#include <istab/solvers.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace istab {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string & path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Game load_game(const std::string & path)
{
    try {
        return parse_instance(read_file(path));
    }
    catch (const ParseError & e) {
        throw UsageError(path + ": " + e.what());
    }
}

Matching load_matching(const std::string & path, int n)
{
    try {
        return parse_matching(read_file(path), n);
    }
    catch (const ParseError & e) {
        throw UsageError(path + ": " + e.what());
    }
}

Concept concept_option(const std::string & text)
{
    auto c = parse_concept(text);
    if (!c)
        throw UsageError("unknown concept '" + text + "'");
    return *c;
}

std::string target_name(PlayerId target)
{
    return target == kAlone ? std::string("alone") : std::to_string(target);
}

std::string describe(const DeviationWitness & w)
{
    return "DEVIATION mover=" + std::to_string(w.mover) + " target=" + target_name(w.target)
           + " concept=" + std::string(name(w.stability));
}

/// Witness line for an unstable matching, empty if stable.
std::string find_witness(const Game & game, const Matching & m, Concept c)
{
    switch (c) {
    case Concept::IR:
        if (auto i = find_ir_violation(game, m))
            return describe({*i, kAlone, Concept::IR});
        return {};
    case Concept::Core:
    case Concept::StrictCore:
        if (auto block = find_pair_block(game, m, c == Concept::StrictCore)) {
            if (block->degenerate())
                return describe({block->first, kAlone, c});
            return "BLOCKING_PAIR i=" + std::to_string(block->first) + " j=" + std::to_string(block->second)
                   + " concept=" + std::string(name(c));
        }
        return {};
    default:
        if (auto w = find_deviation(game, m, c))
            return describe(*w);
        return {};
    }
}

struct Options {
    std::string concept_text;
    std::string instance;
    std::string matching;
    std::string method = "poly";
    bool count = false;
    int cap = kDefaultBruteForceCap;
    std::string start = "singletons";
    std::size_t max_steps = 1000;
    std::string mode;
    std::string graph;
    int k = 0;
    int players = -1, men = -1, women = -1;
    double ties = 0.0, accept = 1.0;
    bool mutual = false, complete = false;
    std::uint64_t seed = 0;
};

int cmd_solve(const Options & o, std::ostream & out, std::ostream & err)
{
    Game game = load_game(o.instance);
    if (o.concept_text == "is") {
        if (!game.is_marriage())
            throw UsageError("--concept is needs a marriage game (roommate games may have no IS matching)");
        out << format_matching(compute_is_marriage(game));
    }
    else if (o.concept_text == "cis-ir")
        out << format_matching(compute_cis_ir(game).matching);
    else if (o.concept_text == "cns")
        out << format_matching(compute_cns(game).matching);
    else if (game.is_marriage())
        out << format_matching(compute_ns_marriage_complete(game));
    else {
        auto m = exists_ns_is_roommate_complete(game);
        if (!m) {
            err << "no Nash stable matching exists\n";
            out << "NO\n";
            return kExitNegative;
        }
        out << format_matching(*m);
    }
    return kExitOk;
}

int cmd_verify(const Options & o, std::ostream & out, std::ostream &)
{
    Concept c = concept_option(o.concept_text);
    Game game = load_game(o.instance);
    Matching m = load_matching(o.matching, game.size());
    std::string witness = find_witness(game, m, c);
    if (witness.empty()) {
        out << "STABLE\n";
        return kExitOk;
    }
    out << "UNSTABLE\n" << witness << '\n';
    return kExitNegative;
}

int cmd_exists(const Options & o, std::ostream & out, std::ostream &)
{
    Concept c = concept_option(o.concept_text);
    if (c != Concept::NS && c != Concept::IS)
        throw UsageError("exists supports --concept ns or is");
    Game game = load_game(o.instance);
    std::optional<Matching> found;
    if (o.method == "brute")
        found = brute_force(game, c, o.cap).first;
    else if (o.method == "search")
        found = exhaustive_search(game, c);
    else if (!game.is_marriage() && has_no_unacceptability(game))
        found = exists_ns_is_roommate_complete(game);
    else if (game.is_marriage() && c == Concept::IS)
        found = compute_is_marriage(game);
    else if (game.is_marriage() && has_no_unacceptability(game))
        found = compute_ns_marriage_complete(game);
    else
        throw UsageError("no polynomial method for this game: poly needs complete lists, or a marriage game with "
                         "--concept is; use --method brute or --method search");
    if (!found) {
        out << "NO\n";
        return kExitNegative;
    }
    out << "YES\n" << format_matching(*found);
    return kExitOk;
}

int cmd_brute(const Options & o, std::ostream & out, std::ostream &)
{
    Concept c = concept_option(o.concept_text);
    Game game = load_game(o.instance);
    auto result = brute_force(game, c, o.cap);
    if (o.count) {
        out << result.count << '\n';
        return kExitOk;
    }
    if (!result.first) {
        out << "NONE\n";
        return kExitNegative;
    }
    out << format_matching(*result.first);
    return kExitOk;
}

int cmd_dynamics(const Options & o, std::ostream & out, std::ostream &)
{
    Concept c = concept_option(o.concept_text);
    if (c == Concept::IR || c == Concept::Core || c == Concept::StrictCore)
        throw UsageError("dynamics supports ns, is, cns and cis");
    Game game = load_game(o.instance);
    Matching start = o.start == "singletons" ? Matching::singletons(game.size()) : load_matching(o.start, game.size());
    auto trace = run_dynamics(game, c, start, o.max_steps);
    for (std::size_t s = 0; s < trace.steps.size(); ++s)
        out << "STEP " << s + 1 << ' ' << describe(trace.steps[s].move) << '\n';
    switch (trace.outcome) {
    case DynamicsOutcome::Stable:
        out << "STABLE steps=" << trace.steps.size() << '\n' << format_matching(trace.final_matching);
        return kExitOk;
    case DynamicsOutcome::CycleDetected:
        out << "CYCLE first_repeat=" << trace.first_repeat << " steps=" << trace.steps.size() << '\n';
        return kExitCycle;
    case DynamicsOutcome::StepLimit:
        out << "STEP_LIMIT steps=" << trace.steps.size() << '\n';
        return kExitStepLimit;
    }
    return kExitOk;
}

int cmd_reduce(const Options & o, std::ostream & out, std::ostream &)
{
    Graph base;
    try {
        base = parse_graph(read_file(o.graph));
    }
    catch (const ParseError & e) {
        throw UsageError(o.graph + ": " + e.what());
    }
    auto artifact = o.mode == "ns-marriage" ? mmm_to_marriage_ns(base, o.k) : mmm_to_roommate_is(base, o.k);
    out << format_role_map(artifact) << format_instance(artifact.game);
    return kExitOk;
}

int cmd_gen(const Options & o, std::ostream & out, std::ostream &)
{
    GenParams params;
    if (o.men >= 0 || o.women >= 0) {
        if (o.players >= 0)
            throw UsageError("give either --n or --men/--women");
        params.kind = GameKind::Marriage;
        params.men = std::max(o.men, 0);
        params.women = std::max(o.women, 0);
    }
    else {
        if (o.players < 0)
            throw UsageError("gen needs --n or --men/--women");
        params.players = o.players;
    }
    params.tie_probability = o.ties;
    params.acceptability_probability = o.accept;
    params.mutual = o.mutual;
    params.complete = o.complete;
    params.seed = o.seed;
    out << format_instance(random_game(params));
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Individual-based stability in marriage and roommate games", "istab"};
    app.require_subcommand(1);
    Options o;

    auto concept_names = [](std::initializer_list<std::string> names) { return CLI::IsMember(std::vector<std::string>(names)); };

    auto * solve = app.add_subcommand("solve", "compute a stable matching");
    solve->add_option("--concept", o.concept_text, "is | cis-ir | cns | ns-complete")
        ->required()
        ->check(concept_names({"is", "cis-ir", "cns", "ns-complete"}));
    solve->add_option("instance", o.instance)->required();

    auto * verify = app.add_subcommand("verify", "check a matching against a stability concept");
    verify->add_option("--concept", o.concept_text, "ir | ns | is | cns | cis | core | strict-core")
        ->required()
        ->check(concept_names({"ir", "ns", "is", "cns", "cis", "core", "strict-core"}));
    verify->add_option("instance", o.instance)->required();
    verify->add_option("matching", o.matching)->required();

    auto * exists = app.add_subcommand("exists", "decide whether an NS or IS matching exists");
    exists->add_option("--concept", o.concept_text)->required()->check(concept_names({"ns", "is"}));
    exists->add_option("--method", o.method, "poly | brute | search")->check(concept_names({"poly", "brute", "search"}));
    exists->add_option("--cap", o.cap, "player cap for brute force");
    exists->add_option("instance", o.instance)->required();

    auto * brute = app.add_subcommand("brute", "enumerate all matchings");
    brute->add_option("--concept", o.concept_text)
        ->required()
        ->check(concept_names({"ir", "ns", "is", "cns", "cis", "core", "strict-core"}));
    brute->add_flag("--count", o.count, "print the number of stable matchings");
    brute->add_option("--cap", o.cap, "player cap");
    brute->add_option("instance", o.instance)->required();

    auto * dynamics = app.add_subcommand("dynamics", "follow deviations until stable, cyclic or out of steps");
    dynamics->add_option("--concept", o.concept_text)->required()->check(concept_names({"ns", "is", "cns", "cis"}));
    dynamics->add_option("--start", o.start, "'singletons' or a matching file");
    dynamics->add_option("--max-steps", o.max_steps);
    dynamics->add_option("instance", o.instance)->required();

    auto * reduce = app.add_subcommand("reduce", "build a hardness gadget game from a graph");
    reduce->add_option("mode", o.mode, "ns-marriage | is-roommate")
        ->required()
        ->check(concept_names({"ns-marriage", "is-roommate"}));
    reduce->add_option("graph", o.graph)->required();
    reduce->add_option("k", o.k)->required();

    auto * gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--n", o.players, "roommate game size");
    gen->add_option("--men", o.men);
    gen->add_option("--women", o.women);
    gen->add_option("--tie-probability", o.ties)->check(CLI::Range(0.0, 1.0));
    gen->add_option("--acceptability-probability", o.accept)->check(CLI::Range(0.0, 1.0));
    gen->add_flag("--mutual", o.mutual);
    gen->add_flag("--complete", o.complete);
    gen->add_option("--seed", o.seed);

    std::vector<const char *> argv{"istab"};
    for (const auto & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(o, out, err);
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (exists->parsed()) return cmd_exists(o, out, err);
        if (brute->parsed()) return cmd_brute(o, out, err);
        if (dynamics->parsed()) return cmd_dynamics(o, out, err);
        if (reduce->parsed()) return cmd_reduce(o, out, err);
        if (gen->parsed()) return cmd_gen(o, out, err);
    }
    catch (const UsageError & e) {
        err << "error: " << e.what() << '\n';
    }
    catch (const PreconditionError & e) {
        err << "error: " << e.what() << '\n';
    }
    catch (const InternalError & e) {
        err << "internal error: " << e.what() << '\n';
    }
    catch (const std::invalid_argument & e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

} // namespace istab
