// Command-line driver: search, train, baseline, report, decode.

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eqas/analysis.hpp"
#include "eqas/config.hpp"
#include "eqas/errors.hpp"
#include "eqas/format.hpp"
#include "eqas/genome.hpp"
#include "eqas/reinforce.hpp"
#include "eqas/search.hpp"

namespace fs = std::filesystem;
using namespace eqas;

namespace {

void write_file(const fs::path &path, const std::string &content) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        throw Error("failed to write " + path.string());
    }
}

template <typename Fn> std::string render(Fn &&fn) {
    std::ostringstream os;
    fn(os);
    return os.str();
}

struct SearchArgs {
    std::string config_path;
    std::string env;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> workers;
    std::optional<std::string> out;
    std::optional<std::size_t> generations;
    std::optional<std::size_t> pop_size;
    std::optional<std::size_t> episodes;
};

int cmd_search(const SearchArgs &args) {
    config::RunConfig cfg;
    if (!args.config_path.empty()) {
        cfg = config::load_run_config(args.config_path);
        if (!args.env.empty() && args.env != cfg.env.name) {
            throw ConfigError("--env conflicts with run.env in " + args.config_path);
        }
    } else if (!args.env.empty()) {
        cfg = config::defaults_for(args.env);
    } else {
        throw ConfigError("run.env: missing environment name (pass a config file or --env)");
    }
    if (args.seed) {
        config::apply_seed(cfg, *args.seed);
    }
    if (args.workers) {
        cfg.search.workers = *args.workers;
    }
    if (args.out) {
        cfg.out_dir = *args.out;
    }
    if (args.generations) {
        cfg.search.generations = *args.generations;
    }
    if (args.pop_size) {
        cfg.search.pop_size = *args.pop_size;
    }
    if (args.episodes) {
        cfg.search.base_episodes = *args.episodes;
    }
    cfg.search.validate();

    const auto report = search::run_search(cfg.search, cfg.env, cfg.train);
    write_file(cfg.out_dir / "search_report.json", search::to_json(report).dump(2) + "\n");
    write_file(cfg.out_dir / "generations.csv",
               render([&](std::ostream &os) { search::write_generations_csv(os, report); }));
    std::cout << genome::canonicalize(report.best.genome).to_string() << "\n";
    std::cerr << "best fitness " << format_double(*report.best.fitness) << ", report in "
              << cfg.out_dir.string() << "\n";
    return 0;
}

struct TrainArgs {
    std::string genome;
    std::string env = "CartPole-v1";
    std::optional<std::size_t> episodes;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    std::string out = "results";
};

int cmd_train(const TrainArgs &args) {
    auto cfg = config::defaults_for(args.env);
    const auto g = genome::parse_unbounded(args.genome);
    const auto arch = genome::decode(g, cfg.env.state_dim);
    if (args.episodes) {
        cfg.train.episodes = *args.episodes;
    }
    if (args.trials == 0) {
        throw ConfigError("--trials must be at least 1");
    }

    std::vector<rl::LearningCurve> curves(args.trials);
    std::vector<std::string> errors(args.trials);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (auto i = next.fetch_add(1); i < args.trials; i = next.fetch_add(1)) {
            auto tc = cfg.train;
            tc.seed = args.seed + i;
            try {
                curves[i] = rl::train(arch, cfg.env, tc).curve;
            } catch (const std::exception &e) {
                errors[i] = e.what();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < std::min(args.workers, args.trials); ++w) {
            pool.emplace_back(work);
        }
        work();
    }
    for (std::size_t i = 0; i < args.trials; ++i) {
        if (!errors[i].empty()) {
            throw Error("trial " + std::to_string(i) + " failed: " + errors[i]);
        }
    }

    const fs::path out(args.out);
    for (std::size_t i = 0; i < args.trials; ++i) {
        write_file(out / ("curve_trial" + std::to_string(i) + ".csv"),
                   render([&](std::ostream &os) { rl::write_curve_csv(os, curves[i]); }));
    }
    write_file(out / "summary.csv", render([&](std::ostream &os) {
                   os << "episode,mean,std\n";
                   const auto n = static_cast<double>(args.trials);
                   for (std::size_t e = 0; e < cfg.train.episodes; ++e) {
                       double mean = 0.0;
                       for (const auto &c : curves) {
                           mean += c.episode_rewards[e];
                       }
                       mean /= n;
                       double var = 0.0;
                       for (const auto &c : curves) {
                           var += (c.episode_rewards[e] - mean) * (c.episode_rewards[e] - mean);
                       }
                       os << e << ',' << format_double(mean) << ',' << format_double(std::sqrt(var / n)) << '\n';
                   }
               }));
    for (std::size_t i = 0; i < args.trials; ++i) {
        std::cout << "trial " << i << " seed " << args.seed + i << " fitness "
                  << format_double(rl::fitness(curves[i])) << "\n";
    }
    return 0;
}

struct ReportArgs {
    std::string path;
    std::size_t top_k = 10;
    std::size_t window = 5;
    std::optional<std::string> out;
};

int cmd_report(const ReportArgs &args) {
    std::ifstream in(args.path);
    if (!in) {
        throw Error("cannot read report " + args.path);
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw Error("corrupt report " + args.path + ": " + e.what());
    }
    search::SearchReport report;
    try {
        report = search::report_from_json(j);
    } catch (const std::exception &e) {
        throw Error("corrupt report " + args.path + ": " + e.what());
    }
    const fs::path out = args.out ? fs::path(*args.out) : fs::path(args.path).parent_path();

    const auto top = analysis::top_k(report, args.top_k);
    if (top.size() < args.top_k) {
        std::cerr << "warning: only " << top.size() << " distinct architectures available (requested "
                  << args.top_k << ")\n";
    }
    std::vector<genome::Genome> genomes;
    for (const auto &ind : top) {
        genomes.push_back(ind.genome);
    }
    const auto freq = analysis::op_frequency(genomes);
    write_file(out / "op_frequency.csv",
               render([&](std::ostream &os) { analysis::write_frequency_csv(os, freq); }));

    // Each opcode column smoothed along the position axis.
    analysis::OpFrequencyMatrix smoothed = freq;
    for (std::size_t c = 0; c < freq.probs.cols; ++c) {
        std::vector<double> column(freq.probs.rows);
        for (std::size_t p = 0; p < freq.probs.rows; ++p) {
            column[p] = freq.probs(p, c);
        }
        const auto s = analysis::smooth(column, args.window);
        for (std::size_t p = 0; p < freq.probs.rows; ++p) {
            smoothed.probs(p, c) = s[p];
        }
    }
    write_file(out / "op_frequency_smoothed.csv",
               render([&](std::ostream &os) { analysis::write_frequency_csv(os, smoothed); }));

    std::vector<double> best;
    std::vector<double> mean;
    for (const auto &log : report.generations) {
        best.push_back(*log.best.fitness);
        double acc = 0.0;
        for (const auto &ind : log.population) {
            acc += *ind.fitness;
        }
        mean.push_back(acc / static_cast<double>(log.population.size()));
    }
    const auto best_s = analysis::smooth(best, args.window);
    const auto mean_s = analysis::smooth(mean, args.window);
    write_file(out / "fitness_curve.csv", render([&](std::ostream &os) {
                   os << "generation,best,mean,best_smoothed,mean_smoothed\n";
                   for (std::size_t g = 0; g < best.size(); ++g) {
                       os << report.generations[g].generation << ',' << format_double(best[g]) << ','
                          << format_double(mean[g]) << ',' << format_double(best_s[g]) << ','
                          << format_double(mean_s[g]) << '\n';
                   }
               }));
    write_file(out / "top_architectures.csv", render([&](std::ostream &os) {
                   os << "rank,genome,fitness\n";
                   for (std::size_t i = 0; i < top.size(); ++i) {
                       os << i << ',' << genome::canonicalize(top[i].genome).to_string() << ','
                          << format_double(*top[i].fitness) << '\n';
                   }
               }));
    std::cout << "wrote analysis for " << top.size() << " architectures to " << out.string() << "\n";
    return 0;
}

std::string gate_name(const quantum::GateOp &op) {
    switch (op.kind) {
    case quantum::GateKind::RotX:
        return "Rx";
    case quantum::GateKind::RotY:
        return "Ry";
    case quantum::GateKind::RotZ:
        return "Rz";
    case quantum::GateKind::CZ:
        return "CZ";
    }
    return "?";
}

int cmd_decode(const std::string &text, const std::string &env_name) {
    const auto env = envs::EnvSpec::from_name(env_name);
    const auto g = genome::parse_unbounded(text);
    const auto arch = genome::decode(g, env.state_dim);
    const auto circuit = genome::expand(arch);
    const auto obs = rl::observables_for(env);
    const auto shape = genome::param_shape(arch, obs.n_actions(), obs.obs_per_action());

    std::cout << "genome    " << genome::canonicalize(g).to_string() << "\n";
    std::cout << "qubits    " << env.state_dim << " (" << env.name << ")\n";
    std::cout << "blocks   ";
    for (auto b : arch.blocks) {
        std::cout << ' ' << genome::block_name(b);
    }
    std::cout << " measurement\n";
    std::cout << "gates     " << circuit.ops.size() << "\n";
    for (const auto &op : circuit.ops) {
        std::cout << "  " << gate_name(op) << '(' << op.target;
        if (op.kind == quantum::GateKind::CZ) {
            std::cout << ", " << op.partner << ")\n";
        } else if (const auto *t = std::get_if<quantum::TrainableTheta>(&op.angle_source)) {
            std::cout << ") theta[" << t->index << "]\n";
        } else {
            const auto &d = std::get<quantum::ScaledData>(op.angle_source);
            std::cout << ") lambda[" << d.lambda_index << "] * d[" << d.data_index << "]\n";
        }
    }
    std::cout << "params    n_theta=" << shape.n_theta << " n_lambda=" << shape.n_lambda
              << " n_weights=" << shape.n_weights << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Evolutionary architecture search for quantum RL policies"};
    app.require_subcommand(1);

    SearchArgs search_args;
    auto *search_cmd = app.add_subcommand("search", "run the evolutionary search");
    search_cmd->add_option("config", search_args.config_path, "INI config file");
    search_cmd->add_option("--env", search_args.env, "environment (when no config file)")->envname("EQAS_ENV");
    search_cmd->add_option("--seed", search_args.seed, "root seed")->envname("EQAS_SEED");
    search_cmd->add_option("--workers", search_args.workers, "parallel evaluations")->envname("EQAS_WORKERS");
    search_cmd->add_option("--out", search_args.out, "output directory")->envname("EQAS_OUT");
    search_cmd->add_option("--generations", search_args.generations, "number of generations");
    search_cmd->add_option("--pop-size", search_args.pop_size, "population size");
    search_cmd->add_option("--episodes", search_args.episodes, "base episode budget before the search factor");

    TrainArgs train_args;
    auto *train_cmd = app.add_subcommand("train", "train a genome for several trials");
    train_cmd->add_option("genome", train_args.genome, "hyphen-joined genome, e.g. 1-2-3-0")->required();
    train_cmd->add_option("--env", train_args.env, "CartPole-v1 or MountainCar-v0")->envname("EQAS_ENV");
    train_cmd->add_option("--episodes", train_args.episodes, "episodes per trial")->envname("EQAS_EPISODES");
    train_cmd->add_option("--trials", train_args.trials, "independent trials")->envname("EQAS_TRIALS");
    train_cmd->add_option("--seed", train_args.seed, "root seed")->envname("EQAS_SEED");
    train_cmd->add_option("--workers", train_args.workers, "parallel trials")->envname("EQAS_WORKERS");
    train_cmd->add_option("--out", train_args.out, "output directory")->envname("EQAS_OUT");

    std::size_t depth = 6;
    std::string baseline_env = "CartPole-v1";
    auto *baseline_cmd = app.add_subcommand("baseline", "print the alternating-layer genome");
    baseline_cmd->add_option("--depth", depth, "number of layers")->envname("EQAS_DEPTH");
    baseline_cmd->add_option("--env", baseline_env, "environment")->envname("EQAS_ENV");

    ReportArgs report_args;
    auto *report_cmd = app.add_subcommand("report", "analyse a search report");
    report_cmd->add_option("report", report_args.path, "search_report.json")->required();
    report_cmd->add_option("--top-k", report_args.top_k, "architectures to list")->envname("EQAS_TOP_K");
    report_cmd->add_option("--window", report_args.window, "smoothing window");
    report_cmd->add_option("--out", report_args.out, "output directory")->envname("EQAS_OUT");

    std::string decode_genome;
    std::string decode_env = "CartPole-v1";
    auto *decode_cmd = app.add_subcommand("decode", "show blocks, gates and parameter counts");
    decode_cmd->add_option("genome", decode_genome, "hyphen-joined genome")->required();
    decode_cmd->add_option("--env", decode_env, "environment")->envname("EQAS_ENV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*search_cmd) {
            return cmd_search(search_args);
        }
        if (*train_cmd) {
            return cmd_train(train_args);
        }
        if (*baseline_cmd) {
            (void)envs::EnvSpec::from_name(baseline_env);
            std::cout << genome::alternating_layer_genome(depth).to_string() << "\n";
            return 0;
        }
        if (*report_cmd) {
            return cmd_report(report_args);
        }
        if (*decode_cmd) {
            return cmd_decode(decode_genome, decode_env);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
