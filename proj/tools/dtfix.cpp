// dtfix: command-line front end for the demand tournament fixing solvers.
//
// Exit status: 0 yes, 10 no, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dtf/app.hpp"
#include "dtf/exact.hpp"
#include "dtf/fas.hpp"
#include "dtf/fixer.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 10;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

dtf::ParsedFile read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return dtf::parse_instance(buf.str());
}

dtf::ValidatedInstance read_demand_file(const std::string& path)
{
    auto parsed = read_file(path);
    if (!std::holds_alternative<dtf::DemandInstance>(parsed))
        throw InputError(path + " is a target file; run 'dtfix reduce' first");
    return dtf::validate_instance(std::get<dtf::DemandInstance>(std::move(parsed)));
}

void print_seeding(const dtf::Seeding& s)
{
    for (std::size_t i = 0; i < s.order.size(); ++i)
        std::cout << (i ? " " : "") << s.order[i];
    std::cout << '\n';
}

struct SolveArgs {
    std::string file;
    std::string algo = "dp";
    bool weighted = false;
    bool rounds_strict = false;
    std::string render;
};

int run_solve(const SolveArgs& args)
{
    auto inst = read_demand_file(args.file);
    if (args.rounds_strict)
        for (const dtf::Arc& a : inst.demands())
            if (!inst.round_of(a))
                throw InputError("--rounds-strict: demand " + std::to_string(a.winner) + " " +
                                 std::to_string(a.loser) + " has no round");

    std::optional<dtf::Seeding> seeding;
    if (args.weighted) {
        if (args.algo != "dp")
            throw InputError("--weighted needs --algo dp");
        std::map<dtf::Arc, std::int64_t> weights = inst.instance().weights;
        if (weights.empty())
            for (const dtf::Arc& a : inst.demands())
                weights[a] = 1;
        auto res = dtf::dp_max_weight(inst, weights);
        print_seeding(res.seeding);
        std::cout << "best " << res.best << '\n';
        seeding = res.seeding;
    } else if (args.algo == "oracle") {
        seeding = dtf::oracle_solve(inst);
    } else if (args.algo == "dp") {
        seeding = dtf::dp_solve(inst);
    } else if (args.algo == "xp") {
        dtf::FixerOptions opts;
        opts.require_all_rounds = args.rounds_strict;
        seeding = dtf::solve_with_rounds(inst, opts);
    } else {
        seeding = dtf::solve_fpt(inst);
    }

    if (!seeding) {
        std::cout << "no\n";
        return kNo;
    }
    if (!args.weighted)
        print_seeding(*seeding);
    if (!args.render.empty()) {
        auto format = args.render == "dot" ? dtf::RenderFormat::Dot : dtf::RenderFormat::Text;
        auto sim = dtf::simulate(inst.tournament(), *seeding);
        std::cout << dtf::render_bracket(sim.sba, format, inst.demands());
    }
    return kYes;
}

struct GenArgs {
    int n = 8;
    int k = 0;
    int demands = 0;
    std::string mode = "yes";
    std::uint64_t seed = 0;
    bool rounds = false;
};

int run_gen(const GenArgs& args)
{
    dtf::GenParams p;
    p.n = args.n;
    p.k_target = args.k;
    p.demands = args.demands;
    p.mode = args.mode == "yes" ? dtf::GenMode::Yes : dtf::GenMode::Uniform;
    p.seed = args.seed;
    p.with_rounds = args.rounds;
    std::cout << dtf::serialize_instance(dtf::gen_instance(p));
    return kYes;
}

int run_reduce(const std::string& path)
{
    auto parsed = read_file(path);
    if (!std::holds_alternative<dtf::TfInstance>(parsed))
        throw InputError(path + " has no target line");
    std::cout << dtf::serialize_instance(dtf::reduce_tf(std::get<dtf::TfInstance>(parsed)));
    return kYes;
}

int run_verify(const std::string& path, const std::string& seeding_text)
{
    auto inst = read_demand_file(path);
    dtf::Seeding s;
    std::istringstream in(seeding_text);
    for (std::string word; in >> word;) {
        try {
            std::size_t used = 0;
            s.order.push_back(std::stoi(word, &used));
            if (used != word.size())
                throw std::invalid_argument(word);
        } catch (const std::exception&) {
            throw InputError("bad player id '" + word + "' in --seeding");
        }
    }
    if (!dtf::is_bijection(s, inst.size()))
        throw InputError("--seeding is not a permutation of 0.." + std::to_string(inst.size() - 1));

    auto report = dtf::check_solution(inst, s);
    for (const dtf::Arc& a : report.missed)
        std::cout << "missed " << a.winner << ' ' << a.loser << '\n';
    for (const auto& v : report.round_violations)
        std::cout << "round " << v.demand.winner << ' ' << v.demand.loser << " wanted " << v.required
                  << " played " << v.played << '\n';
    std::cout << (report.ok ? "ok" : "not ok") << '\n';
    return report.ok ? kYes : kNo;
}

int run_fas(const std::string& path)
{
    auto parsed = read_file(path);
    const dtf::TournamentDigraph& t = std::visit([](const auto& f) -> const dtf::TournamentDigraph& {
        return f.tournament;
    }, parsed);
    auto fs = dtf::minimum_fas(t);
    std::cout << "k " << fs.k() << '\n';
    std::cout << "sigma";
    for (dtf::Player v : fs.sigma.strongest_first())
        std::cout << ' ' << v;
    std::cout << '\n';
    for (const dtf::Arc& a : fs.arcs)
        std::cout << "arc " << a.winner << ' ' << a.loser << '\n';
    return kYes;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Seedings that realise demanded matches in a knockout tournament"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Find a seeding playing every demand");
    solve_cmd->add_option("--algo", solve.algo, "Solver")
        ->check(CLI::IsMember({"oracle", "dp", "xp", "fpt"}))
        ->capture_default_str();
    solve_cmd->add_flag("--weighted", solve.weighted, "Maximise the weight of played demands");
    solve_cmd->add_flag("--rounds-strict", solve.rounds_strict, "Every demand must carry a round");
    solve_cmd->add_option("--render", solve.render, "Print the bracket")->check(CLI::IsMember({"text", "dot"}));
    solve_cmd->add_option("FILE", solve.file, "Instance file")->required();

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("--n", gen.n, "Players (power of two)")->capture_default_str();
    gen_cmd->add_option("--k", gen.k, "Arcs to reverse")->capture_default_str();
    gen_cmd->add_option("--demands", gen.demands, "Demand count")->capture_default_str();
    gen_cmd->add_option("--mode", gen.mode, "yes: demands from a real bracket; uniform: any arcs")
        ->check(CLI::IsMember({"yes", "uniform"}))
        ->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
    gen_cmd->add_flag("--rounds", gen.rounds, "Attach a round to each demand");

    std::string reduce_file;
    auto* reduce_cmd = app.add_subcommand("reduce", "Turn a target file into a demand instance");
    reduce_cmd->add_option("TF_FILE", reduce_file, "Target file")->required();

    std::string verify_file;
    std::string verify_seeding;
    auto* verify_cmd = app.add_subcommand("verify", "Check a seeding against an instance");
    verify_cmd->add_option("FILE", verify_file, "Instance file")->required();
    verify_cmd->add_option("--seeding", verify_seeding, "Space-separated player ids")->required();

    std::string fas_file;
    auto* fas_cmd = app.add_subcommand("fas", "Print a minimum feedback arc set");
    fas_cmd->add_option("FILE", fas_file, "Instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*solve_cmd)
            return run_solve(solve);
        if (*gen_cmd)
            return run_gen(gen);
        if (*reduce_cmd)
            return run_reduce(reduce_file);
        if (*verify_cmd)
            return run_verify(verify_file, verify_seeding);
        return run_fas(fas_file);
    } catch (const dtf::Error& e) {
        if (e.code() == dtf::ErrorCode::RoundConflict) {
            std::cerr << "dtfix: " << e.what() << '\n';
            std::cout << "no\n";
            return kNo;
        }
        std::cerr << "dtfix: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        std::cerr << "dtfix: " << e.what() << '\n';
        return kInputError;
    }
}
