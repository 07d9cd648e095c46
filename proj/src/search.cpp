#include "eqas/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <set>
#include <thread>

#include "eqas/errors.hpp"
#include "eqas/format.hpp"
#include "eqas/nsga2.hpp"

namespace eqas::search {

using genome::Genome;
using genome::OpCode;

double SearchConfig::effective_mutation_prob() const {
    return mutation_prob.value_or(1.0 / static_cast<double>(max_len));
}

std::size_t SearchConfig::training_episodes() const {
    return static_cast<std::size_t>(std::llround(episode_factor * static_cast<double>(base_episodes)));
}

void SearchConfig::validate() const {
    if (pop_size < 2 || pop_size % 2 != 0) {
        throw ConfigError("pop_size must be an even number >= 2");
    }
    if (max_len < 1) {
        throw ConfigError("max_len must be at least 1");
    }
    if (!(episode_factor > 0.0 && episode_factor <= 1.0)) {
        throw ConfigError("episode_factor must lie in (0, 1]");
    }
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) {
        throw ConfigError("crossover_prob must lie in [0, 1]");
    }
    const double pm = effective_mutation_prob();
    if (!(pm >= 0.0 && pm <= 1.0)) {
        throw ConfigError("mutation_prob must lie in [0, 1]");
    }
    if (!(mutation_eta >= 0.0) || !std::isfinite(mutation_eta)) {
        throw ConfigError("mutation_eta must be a non-negative finite number");
    }
    if (workers < 1) {
        throw ConfigError("workers must be at least 1");
    }
    if (base_episodes < 1) {
        throw ConfigError("base_episodes must be at least 1");
    }
}

std::pair<Genome, Genome> two_point_crossover(const Genome &a, const Genome &b, std::size_t first,
                                              std::size_t last) {
    if (a.size() != b.size()) {
        throw ConfigError("crossover parents must have equal length");
    }
    if (first > last || last > a.size()) {
        throw IndexError("crossover cut points out of range");
    }
    auto ca = a.codes();
    auto cb = b.codes();
    std::swap_ranges(ca.begin() + static_cast<std::ptrdiff_t>(first),
                     ca.begin() + static_cast<std::ptrdiff_t>(last),
                     cb.begin() + static_cast<std::ptrdiff_t>(first));
    return {Genome(std::move(ca), a.max_length()), Genome(std::move(cb), b.max_length())};
}

std::pair<Genome, Genome> two_point_crossover(const Genome &a, const Genome &b, Rng &rng) {
    const auto n = a.size();
    // Unordered pair of distinct cut positions from {0, ..., n}.
    auto i = static_cast<std::size_t>(uniform_index(rng, n + 1));
    auto j = static_cast<std::size_t>(uniform_index(rng, n));
    if (j >= i) {
        ++j;
    }
    if (i > j) {
        std::swap(i, j);
    }
    return two_point_crossover(a, b, i, j);
}

Genome polynomial_mutation_int(const Genome &g, double eta, double prob, Rng &rng) {
    constexpr double lo = 0.0;
    constexpr double hi = static_cast<double>(genome::kNumOpCodes - 1);
    auto codes = g.codes();
    const double mut_pow = 1.0 / (eta + 1.0);
    for (auto &code : codes) {
        if (!(uniform01(rng) < prob)) {
            continue;
        }
        const double x = static_cast<double>(genome::to_int(code));
        const double delta1 = (x - lo) / (hi - lo);
        const double delta2 = (hi - x) / (hi - lo);
        const double r = uniform01(rng);
        double deltaq = 0.0;
        if (r <= 0.5) {
            const double val = 2.0 * r + (1.0 - 2.0 * r) * std::pow(1.0 - delta1, eta + 1.0);
            deltaq = std::pow(val, mut_pow) - 1.0;
        } else {
            const double val = 2.0 * (1.0 - r) + 2.0 * (r - 0.5) * std::pow(1.0 - delta2, eta + 1.0);
            deltaq = 1.0 - std::pow(val, mut_pow);
        }
        const double y = std::clamp(x + deltaq * (hi - lo), lo, hi);
        code = genome::opcode_from_int(static_cast<int>(std::nearbyint(y)));
    }
    return Genome(std::move(codes), g.max_length());
}

Population eliminate_duplicates(Population pop, Rng &rng, std::size_t max_len, const Population &existing) {
    constexpr int kMaxAttempts = 1000;
    std::set<std::vector<OpCode>> seen;
    for (const auto &ind : existing) {
        seen.insert(genome::architecture_key(ind.genome));
    }
    for (auto &ind : pop) {
        auto key = genome::architecture_key(ind.genome);
        if (seen.insert(key).second) {
            continue;
        }
        Genome candidate = genome::random_codes(rng, max_len);
        for (int attempt = 1; attempt < kMaxAttempts; ++attempt) {
            key = genome::architecture_key(candidate);
            if (!seen.contains(key)) {
                break;
            }
            candidate = genome::random_codes(rng, max_len);
        }
        // Search space smaller than the population: the last draw is kept as is.
        seen.insert(genome::architecture_key(candidate));
        ind = Individual{std::move(candidate), std::nullopt, 0, 0, {}};
    }
    return pop;
}

FitnessFn rl_fitness(const envs::EnvSpec &env, const rl::TrainConfig &train) {
    return [env, train](const Genome &g, std::uint64_t seed, std::size_t episodes) {
        auto cfg = train;
        cfg.seed = seed;
        cfg.episodes = episodes;
        const auto arch = genome::decode(g, env.state_dim);
        return rl::fitness(rl::train(arch, env, cfg).curve);
    };
}

Evaluator rl_evaluator(const envs::EnvSpec &env, const rl::TrainConfig &train) {
    return Evaluator{rl_fitness(env, train), env.min_episode_return()};
}

std::uint64_t eval_seed(std::uint64_t search_seed, std::size_t generation, std::size_t slot) {
    return derive_seed(search_seed, "evaluate", generation, slot);
}

Individual evaluate(Individual ind, const Evaluator &evaluator, std::size_t episodes, std::uint64_t seed) {
    if (ind.evaluated()) {
        throw UsageError("individual already evaluated");
    }
    ind.eval_seed = seed;
    ind.eval_episodes = episodes;
    try {
        ind.fitness = evaluator.fitness(ind.genome, seed, episodes);
        if (!std::isfinite(*ind.fitness)) {
            throw NumericError("non-finite fitness");
        }
    } catch (const std::exception &e) {
        ind.fitness = evaluator.penalty;
        ind.error = e.what();
    }
    return ind;
}

void evaluate_population(Population &pop, const SearchConfig &cfg, std::size_t generation,
                         const Evaluator &evaluator) {
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        if (!pop[i].evaluated()) {
            pending.push_back(i);
        }
    }
    const auto episodes = cfg.training_episodes();
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (auto k = next.fetch_add(1); k < pending.size(); k = next.fetch_add(1)) {
            const auto slot = pending[k];
            pop[slot] = evaluate(std::move(pop[slot]), evaluator, episodes, eval_seed(cfg.seed, generation, slot));
        }
    };
    const auto n_workers = std::min(cfg.workers, pending.size());
    if (n_workers <= 1) {
        work();
        return;
    }
    std::vector<std::jthread> threads;
    threads.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) {
        threads.emplace_back(work);
    }
}

namespace {

std::vector<nsga2::Objectives> objectives(const Population &pop) {
    std::vector<nsga2::Objectives> out;
    out.reserve(pop.size());
    for (const auto &ind : pop) {
        if (!ind.evaluated()) {
            throw UsageError("objectives requested for an unevaluated individual");
        }
        out.push_back({*ind.fitness});
    }
    return out;
}

Population sorted_by_fitness(Population pop) {
    std::stable_sort(pop.begin(), pop.end(),
                     [](const Individual &a, const Individual &b) { return *a.fitness > *b.fitness; });
    return pop;
}

} // namespace

GenerationResult step_generation(const Population &parents, const SearchConfig &cfg, std::size_t generation,
                                 const Evaluator &evaluator) {
    const auto objs = objectives(parents);
    const auto ranking = nsga2::rank(objs);
    Rng rng(derive_seed(cfg.seed, "variation", generation));

    Population offspring;
    offspring.reserve(cfg.pop_size);
    const double pm = cfg.effective_mutation_prob();
    while (offspring.size() < cfg.pop_size) {
        const auto &p1 = parents[nsga2::tournament(ranking, rng)].genome;
        const auto &p2 = parents[nsga2::tournament(ranking, rng)].genome;
        auto children = uniform01(rng) < cfg.crossover_prob ? two_point_crossover(p1, p2, rng)
                                                            : std::pair<Genome, Genome>{p1, p2};
        offspring.push_back({polynomial_mutation_int(children.first, cfg.mutation_eta, pm, rng), {}, 0, 0, {}});
        if (offspring.size() < cfg.pop_size) {
            offspring.push_back(
                {polynomial_mutation_int(children.second, cfg.mutation_eta, pm, rng), {}, 0, 0, {}});
        }
    }
    offspring = eliminate_duplicates(std::move(offspring), rng, cfg.max_len, parents);
    evaluate_population(offspring, cfg, generation, evaluator);

    Population merged = parents;
    merged.insert(merged.end(), offspring.begin(), offspring.end());
    Population survivors;
    survivors.reserve(cfg.pop_size);
    for (auto idx : nsga2::select_survivors(objectives(merged), cfg.pop_size)) {
        survivors.push_back(merged[idx]);
    }
    return {sorted_by_fitness(std::move(survivors)), std::move(offspring)};
}

Population nsga2_generation(const Population &parents, const SearchConfig &cfg, std::size_t generation,
                            const Evaluator &evaluator) {
    return step_generation(parents, cfg, generation, evaluator).survivors;
}

SearchReport run_search(const SearchConfig &cfg, const envs::EnvSpec &env, const rl::TrainConfig &train) {
    return run_search(cfg, env, train, rl_evaluator(env, train));
}

SearchReport run_search(const SearchConfig &cfg, const envs::EnvSpec &env, const rl::TrainConfig &train,
                        const Evaluator &evaluator) {
    cfg.validate();
    train.validate();
    SearchReport report{cfg, env.name, train, {}, {}};

    Rng rng(derive_seed(cfg.seed, "initial-population"));
    Population pop;
    pop.reserve(cfg.pop_size);
    for (std::size_t i = 0; i < cfg.pop_size; ++i) {
        pop.push_back({genome::random_codes(rng, cfg.max_len), {}, 0, 0, {}});
    }
    pop = eliminate_duplicates(std::move(pop), rng, cfg.max_len);
    evaluate_population(pop, cfg, 0, evaluator);
    pop = sorted_by_fitness(std::move(pop));
    report.generations.push_back({0, pop, {}, pop.front()});

    for (std::size_t g = 1; g <= cfg.generations; ++g) {
        auto step = step_generation(pop, cfg, g, evaluator);
        pop = std::move(step.survivors);
        report.generations.push_back({g, pop, std::move(step.offspring), pop.front()});
    }

    report.best = report.generations.front().best;
    for (const auto &log : report.generations) {
        if (*log.best.fitness > *report.best.fitness) {
            report.best = log.best;
        }
    }
    return report;
}

namespace {

nlohmann::ordered_json individual_json(const Individual &ind) {
    nlohmann::ordered_json j;
    j["genome"] = genome::canonicalize(ind.genome).to_string();
    j["codes"] = ind.genome.to_string();
    j["fitness"] = *ind.fitness;
    j["eval_seed"] = ind.eval_seed;
    j["episodes"] = ind.eval_episodes;
    if (!ind.error.empty()) {
        j["error"] = ind.error;
    }
    return j;
}

Individual individual_from_json(const nlohmann::json &j, std::size_t max_len) {
    Individual ind;
    ind.genome = Genome::parse(j.at("codes").get<std::string>(), max_len);
    ind.fitness = j.at("fitness").get<double>();
    ind.eval_seed = j.at("eval_seed").get<std::uint64_t>();
    ind.eval_episodes = j.at("episodes").get<std::size_t>();
    if (j.contains("error")) {
        ind.error = j.at("error").get<std::string>();
    }
    return ind;
}

} // namespace

nlohmann::ordered_json to_json(const SearchReport &report) {
    nlohmann::ordered_json j;
    const auto &c = report.config;
    j["config"] = {
        {"env", report.env_name},
        {"seed", c.seed},
        {"pop_size", c.pop_size},
        {"generations", c.generations},
        {"max_len", c.max_len},
        {"episode_factor", c.episode_factor},
        {"base_episodes", c.base_episodes},
        {"crossover_prob", c.crossover_prob},
        {"mutation_prob", c.effective_mutation_prob()},
        {"mutation_eta", c.mutation_eta},
    };
    const auto &t = report.train;
    j["train"] = {
        {"batch_size", t.batch_size},
        {"lr_theta", t.lr_theta},
        {"lr_lambda", t.lr_lambda},
        {"lr_weights", t.lr_weights},
        {"gamma", t.gamma},
        {"use_baseline", t.use_baseline},
        {"beta", t.beta},
        {"preprocessing", policy::to_string(t.preprocessing)},
        {"optimizer", rl::to_string(t.optimizer)},
        {"return_scaling", rl::to_string(t.return_scaling)},
    };
    auto gens = nlohmann::ordered_json::array();
    for (const auto &log : report.generations) {
        nlohmann::ordered_json g;
        g["generation"] = log.generation;
        g["population"] = nlohmann::ordered_json::array();
        for (const auto &ind : log.population) {
            g["population"].push_back(individual_json(ind));
        }
        g["offspring"] = nlohmann::ordered_json::array();
        for (const auto &ind : log.offspring) {
            g["offspring"].push_back(individual_json(ind));
        }
        g["best"] = individual_json(log.best);
        gens.push_back(std::move(g));
    }
    j["generations"] = std::move(gens);
    j["best"] = individual_json(report.best);
    return j;
}

SearchReport report_from_json(const nlohmann::json &j) {
    SearchReport r;
    const auto &c = j.at("config");
    r.env_name = c.at("env").get<std::string>();
    r.config.seed = c.at("seed").get<std::uint64_t>();
    r.config.pop_size = c.at("pop_size").get<std::size_t>();
    r.config.generations = c.at("generations").get<std::size_t>();
    r.config.max_len = c.at("max_len").get<std::size_t>();
    r.config.episode_factor = c.at("episode_factor").get<double>();
    r.config.base_episodes = c.at("base_episodes").get<std::size_t>();
    r.config.crossover_prob = c.at("crossover_prob").get<double>();
    r.config.mutation_prob = c.at("mutation_prob").get<double>();
    r.config.mutation_eta = c.at("mutation_eta").get<double>();
    if (j.contains("train")) {
        const auto &t = j.at("train");
        r.train.batch_size = t.at("batch_size").get<std::size_t>();
        r.train.lr_theta = t.at("lr_theta").get<double>();
        r.train.lr_lambda = t.at("lr_lambda").get<double>();
        r.train.lr_weights = t.at("lr_weights").get<double>();
        r.train.gamma = t.at("gamma").get<double>();
        r.train.use_baseline = t.at("use_baseline").get<bool>();
        r.train.beta = t.at("beta").get<double>();
        r.train.preprocessing = policy::preprocessing_from_string(t.at("preprocessing").get<std::string>());
        if (t.contains("optimizer")) {
            r.train.optimizer = rl::optimizer_from_string(t.at("optimizer").get<std::string>());
        }
        if (t.contains("return_scaling")) {
            r.train.return_scaling = rl::return_scaling_from_string(t.at("return_scaling").get<std::string>());
        }
    }
    for (const auto &g : j.at("generations")) {
        GenerationLog log;
        log.generation = g.at("generation").get<std::size_t>();
        for (const auto &ind : g.at("population")) {
            log.population.push_back(individual_from_json(ind, r.config.max_len));
        }
        if (g.contains("offspring")) {
            for (const auto &ind : g.at("offspring")) {
                log.offspring.push_back(individual_from_json(ind, r.config.max_len));
            }
        }
        log.best = individual_from_json(g.at("best"), r.config.max_len);
        r.generations.push_back(std::move(log));
    }
    r.best = individual_from_json(j.at("best"), r.config.max_len);
    return r;
}

void write_generations_csv(std::ostream &os, const SearchReport &report) {
    os << "generation,slot,genome,fitness\n";
    for (const auto &log : report.generations) {
        for (std::size_t s = 0; s < log.population.size(); ++s) {
            const auto &ind = log.population[s];
            os << log.generation << ',' << s << ',' << genome::canonicalize(ind.genome).to_string() << ','
               << format_double(*ind.fitness) << '\n';
        }
    }
}

} // namespace eqas::search
