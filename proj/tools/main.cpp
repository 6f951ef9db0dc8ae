// fussga: steady-state GA benchmark front end.
//
// Machine-readable output (CSV) goes to files under --out and to stdout;
// progress and diagnostics go to stderr.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fuss/engine.hpp"
#include "fuss/parse_error.hpp"
#include "fuss/problems/cuboid.hpp"
#include "fuss/problems/deceptive2d.hpp"
#include "fuss/problems/sat.hpp"
#include "fuss/problems/scp.hpp"
#include "fuss/problems/tsp.hpp"
#include "fuss/stats.hpp"

namespace {

using namespace fuss;

struct RunOptions {
    std::string problem;
    std::string instance_path;
    std::vector<std::string> scheme_names;
    double delta = 0.1;
    std::size_t cities = 20;
    std::size_t pop = 0;
    std::size_t init_pop = 0;
    double crossover_prob = -1.0;
    double mutate_prob = -1.0;
    std::uint64_t budget = 0;
    std::optional<double> target;
    std::uint32_t reps = 0;
    std::uint64_t seed = 1;
    std::uint64_t stride = 0;
    bool diversity = false;
    std::string out_dir = ".";
};

struct ProblemDefaults {
    std::size_t pop;
    std::size_t init_pop;
    double crossover_prob;
    double mutate_prob;
    std::uint32_t reps;
    const char* scheme;
};

ProblemDefaults defaults_for(const std::string& problem) {
    if (problem == "deceptive2d") return {10000, 10, 0.25, 0.5, 20, "fussint"};
    if (problem == "cuboid") return {10000, 10000, 0.5, 0.5, 10, "fussint"};
    if (problem == "tsp-random") return {5000, 5000, 0.5, 0.5, 20, "fuss"};
    if (problem == "tsp") return {5000, 5000, 1.0, 0.2, 5, "fuss"};
    if (problem == "scp") return {5000, 5000, 1.0, 0.5, 30, "fussint"};
    return {10000, 10000, 0.5, 0.5, 30, "fussint"};  // sat
}

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    return in;
}

/// A coordinate file's first content line either starts with a letter
/// (header) or holds "id x y"; a matrix file starts with the lone city count.
TspInstance load_tsp_instance_auto(const std::string& path) {
    {
        std::ifstream probe = open_or_fail(path);
        std::string line;
        while (std::getline(probe, line)) {
            std::istringstream fields(line);
            std::vector<std::string> tokens;
            std::string token;
            while (fields >> token) tokens.push_back(token);
            if (tokens.empty()) continue;
            if (std::isalpha(static_cast<unsigned char>(tokens[0][0]))) break;  // header
            if (tokens.size() == 1) {
                std::ifstream in = open_or_fail(path);
                return load_tsp_matrix(in);
            }
            break;
        }
    }
    std::ifstream in = open_or_fail(path);
    return load_tsp_coordinates(in);
}

ExperimentSpec build_spec(const RunOptions& opt, bool minimizing) {
    ExperimentSpec spec;
    for (const auto& name : opt.scheme_names) {
        const auto scheme = parse_scheme(name);
        if (!scheme) throw CLI::ValidationError("--scheme", "unknown scheme '" + name + "'");
        spec.schemes.push_back(*scheme);
    }
    spec.params.max_population = opt.pop;
    spec.params.initial_population = opt.init_pop;
    spec.params.crossover_probability = opt.crossover_prob;
    spec.params.mutate_probability = opt.mutate_prob;
    spec.params.iteration_budget = opt.budget;
    spec.params.rng_seed = opt.seed;
    spec.replications = opt.reps;
    if (opt.target) spec.stop.target_fitness = minimizing ? -*opt.target : *opt.target;
    spec.trace.stride = opt.stride;
    spec.trace.diversity = opt.diversity;
    return spec;
}

template <typename Factory>
int run_and_report(Factory&& factory, const RunOptions& opt) {
    const ExperimentSpec spec = build_spec(opt, factory(0).minimizing());
    std::cerr << "running " << spec.schemes.size() << " scheme(s) x " << spec.replications
              << " replication(s), budget " << spec.params.iteration_budget << " iterations\n";
    const auto table = run_experiment(factory, spec);
    const auto summaries = write_experiment_csvs(opt.out_dir, table, spec);
    std::cerr << "wrote " << (spec.schemes.size() * spec.replications + 1) << " CSV files to "
              << opt.out_dir << "\n";
    write_summary_csv(std::cout, summaries);
    return 0;
}

int run_command(const RunOptions& opt) {
    if (opt.problem == "deceptive2d") {
        const Deceptive2dSpec spec{0.45, 0.45, opt.delta};
        spec.validate();
        return run_and_report(
            [spec](std::uint32_t) { return Deceptive2dProblem(spec); }, opt);
    }
    if (opt.problem == "cuboid") {
        CuboidFunctionSpec fn;
        if (opt.instance_path.empty()) {
            Rng rng(opt.seed);
            fn = cuboid_function_generate(rng);
            const auto path = std::filesystem::path(opt.out_dir) / "cuboid_instance.txt";
            std::filesystem::create_directories(opt.out_dir);
            std::ofstream out(path);
            save_cuboid_spec(out, fn);
            std::cerr << "generated cuboid function (max " << fn.true_maximum << "), saved to "
                      << path.string() << "\n";
        } else {
            std::ifstream in = open_or_fail(opt.instance_path);
            fn = load_cuboid_spec(in);
        }
        return run_and_report([fn](std::uint32_t) { return CuboidProblem(fn); }, opt);
    }
    if (opt.problem == "tsp" || opt.problem == "tsp-random") {
        TspInstance inst;
        if (opt.problem == "tsp-random") {
            Rng rng(opt.seed);
            inst = random_tsp_instance(opt.cities, rng);
            const auto path = std::filesystem::path(opt.out_dir) / "tsp_instance.txt";
            std::filesystem::create_directories(opt.out_dir);
            std::ofstream out(path);
            save_tsp_matrix(out, inst);
            std::cerr << "generated random TSP instance (" << inst.n << " cities), saved to "
                      << path.string() << "\n";
        } else {
            if (opt.instance_path.empty())
                throw CLI::ValidationError("--instance", "required for --problem tsp");
            inst = load_tsp_instance_auto(opt.instance_path);
        }
        return run_and_report([inst](std::uint32_t) { return TspProblem(inst); }, opt);
    }
    if (opt.problem == "scp") {
        if (opt.instance_path.empty())
            throw CLI::ValidationError("--instance", "required for --problem scp");
        std::ifstream in = open_or_fail(opt.instance_path);
        const ScpProblem problem(parse_orlib(in));
        return run_and_report([problem](std::uint32_t) { return problem; }, opt);
    }
    // sat
    if (opt.instance_path.empty())
        throw CLI::ValidationError("--instance", "required for --problem sat");
    std::ifstream in = open_or_fail(opt.instance_path);
    const SatProblem problem(parse_dimacs(in));
    return run_and_report([problem](std::uint32_t) { return problem; }, opt);
}

int generate_command(const std::string& kind, std::uint64_t seed, std::size_t cities,
                     const std::string& out_path) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write to " + out_path);
    Rng rng(seed);
    if (kind == "cuboid") {
        const auto spec = cuboid_function_generate(rng);
        save_cuboid_spec(out, spec);
        std::cerr << "cuboid function with true maximum " << spec.true_maximum << " -> "
                  << out_path << "\n";
    } else {  // tsp-random
        const auto inst = random_tsp_instance(cities, rng);
        save_tsp_matrix(out, inst);
        std::cerr << "random TSP instance with " << inst.n << " cities -> " << out_path << "\n";
    }
    return 0;
}

int inspect_command(const std::string& problem, const std::string& path) {
    std::cout.precision(17);
    if (problem == "cuboid") {
        std::ifstream in = open_or_fail(path);
        const auto spec = load_cuboid_spec(in);
        std::cout << "cuboids," << spec.cuboids.size() << "\n";
        std::cout << "true_maximum," << spec.true_maximum << "\n";
        std::cout << "argmax_witness," << spec.argmax_witness[0] << ' ' << spec.argmax_witness[1]
                  << ' ' << spec.argmax_witness[2] << ' ' << spec.argmax_witness[3] << "\n";
    } else if (problem == "tsp") {
        const auto inst = load_tsp_instance_auto(path);
        std::cout << "cities," << inst.n << "\n";
        std::cout << "source,"
                  << (inst.source == TspInstance::Source::Coordinates ? "coordinates" : "matrix")
                  << "\n";
    } else if (problem == "scp") {
        std::ifstream in = open_or_fail(path);
        const auto inst = parse_orlib(in);
        std::cout << "rows," << inst.rows << "\n";
        std::cout << "cols," << inst.cols << "\n";
        std::cout << "integer_costs," << (inst.integer_costs() ? 1 : 0) << "\n";
    } else {  // sat
        std::ifstream in = open_or_fail(path);
        const auto formula = parse_dimacs(in);
        std::cout << "vars," << formula.num_vars() << "\n";
        std::cout << "clauses," << formula.num_clauses() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state GA benchmark harness with fitness-uniform selection"};
    app.require_subcommand(1);

    // --- run ---
    RunOptions opt;
    auto* run_cmd = app.add_subcommand("run", "Run a replicated experiment and emit CSV");
    run_cmd->add_option("--problem", opt.problem, "Problem family")
        ->required()
        ->check(CLI::IsMember({"deceptive2d", "cuboid", "tsp", "tsp-random", "scp", "sat"}));
    run_cmd->add_option("--instance", opt.instance_path, "Instance file (tsp/scp/sat; cuboid optional)");
    run_cmd->add_option("--delta", opt.delta, "Strip width for deceptive2d")
        ->check(CLI::Range(1e-9, 0.55));
    run_cmd->add_option("--cities", opt.cities, "City count for tsp-random")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10000}));
    run_cmd->add_option("--scheme", opt.scheme_names,
                        "Selection scheme: fuss|fussint|tour<k>|rand (repeatable)");
    run_cmd->add_option("--pop", opt.pop, "Maximum population size");
    run_cmd->add_option("--init-pop", opt.init_pop, "Initial population size");
    run_cmd->add_option("--crossover-prob", opt.crossover_prob, "Crossover probability")
        ->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--mutate-prob", opt.mutate_prob, "Mutation probability after crossover")
        ->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--budget", opt.budget, "Iteration budget (default 100 generations)");
    double target_value = 0.0;
    auto* target_opt = run_cmd->add_option("--target", target_value,
                                           "Stop when best fitness reaches this value "
                                           "(tour length / cover cost for minimizing problems)");
    run_cmd->add_option("--reps", opt.reps, "Replications");
    run_cmd->add_option("--seed", opt.seed, "Base RNG seed (replication r uses seed+r)");
    run_cmd->add_option("--stride", opt.stride, "Trace sampling stride (default pop/10)");
    run_cmd->add_flag("--diversity", opt.diversity, "Record Hamming-diversity columns (sat only)");
    run_cmd->add_option("--out", opt.out_dir, "Output directory for CSV files");

    // --- generate ---
    std::string gen_kind, gen_out;
    std::uint64_t gen_seed = 1;
    std::size_t gen_cities = 20;
    auto* gen_cmd = app.add_subcommand("generate", "Write a random instance file");
    gen_cmd->add_option("--kind", gen_kind, "Instance kind")
        ->required()
        ->check(CLI::IsMember({"cuboid", "tsp-random"}));
    gen_cmd->add_option("--seed", gen_seed, "RNG seed (same seed gives identical bytes)");
    gen_cmd->add_option("--cities", gen_cities, "City count for tsp-random")
        ->check(CLI::Range(std::size_t{2}, std::size_t{10000}));
    gen_cmd->add_option("--out", gen_out, "Output file")->required();

    // --- inspect ---
    std::string ins_problem, ins_path;
    auto* ins_cmd = app.add_subcommand("inspect", "Print facts about an instance file as CSV");
    ins_cmd->add_option("--problem", ins_problem, "Instance kind")
        ->required()
        ->check(CLI::IsMember({"cuboid", "tsp", "scp", "sat"}));
    ins_cmd->add_option("--instance", ins_path, "Instance file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            const auto defaults = defaults_for(opt.problem);
            if (run_cmd->count("--pop") == 0) opt.pop = defaults.pop;
            if (run_cmd->count("--init-pop") == 0)
                opt.init_pop = std::min(defaults.init_pop, opt.pop);
            if (run_cmd->count("--crossover-prob") == 0)
                opt.crossover_prob = defaults.crossover_prob;
            if (run_cmd->count("--mutate-prob") == 0) opt.mutate_prob = defaults.mutate_prob;
            if (run_cmd->count("--reps") == 0) opt.reps = defaults.reps;
            if (run_cmd->count("--budget") == 0) opt.budget = 100 * opt.pop;
            if (opt.scheme_names.empty()) opt.scheme_names = {defaults.scheme};
            if (target_opt->count() > 0) opt.target = target_value;
            if (opt.diversity && opt.problem != "sat")
                throw CLI::ValidationError("--diversity",
                                           "diversity instrumentation needs boolean genomes "
                                           "(--problem sat)");
            return run_command(opt);
        }
        if (gen_cmd->parsed()) return generate_command(gen_kind, gen_seed, gen_cities, gen_out);
        return inspect_command(ins_problem, ins_path);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
