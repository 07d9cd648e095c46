#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "eqas/envs.hpp"
#include "eqas/genome.hpp"
#include "eqas/reinforce.hpp"

namespace eqas::search {

struct Individual {
    genome::Genome genome; // full max_len code vector, tail after the terminator is inert
    std::optional<double> fitness;
    std::uint64_t eval_seed = 0;
    std::size_t eval_episodes = 0;
    std::string error; // non-empty when evaluation failed and a penalty was assigned

    [[nodiscard]] bool evaluated() const noexcept { return fitness.has_value(); }
};

using Population = std::vector<Individual>;

struct SearchConfig {
    std::size_t pop_size = 20;
    std::size_t generations = 20;
    std::size_t max_len = genome::kDefaultMaxLength;
    double episode_factor = 0.8;
    double crossover_prob = 0.9;
    std::optional<double> mutation_prob; // defaults to 1 / max_len
    double mutation_eta = 20.0;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    std::size_t base_episodes = 500;

    [[nodiscard]] double effective_mutation_prob() const;
    [[nodiscard]] std::size_t training_episodes() const;
    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Swaps the segment [first, last) between two equal-length genomes.
[[nodiscard]] std::pair<genome::Genome, genome::Genome> two_point_crossover(
    const genome::Genome &a, const genome::Genome &b, std::size_t first, std::size_t last);

/// Cut points first < last drawn uniformly from [0, length].
[[nodiscard]] std::pair<genome::Genome, genome::Genome> two_point_crossover(
    const genome::Genome &a, const genome::Genome &b, Rng &rng);

/**
 * Bounded polynomial mutation on genes viewed as reals in [0, 3], rounded
 * half-to-even back to opcodes. Each gene mutates independently with `prob`.
 */
[[nodiscard]] genome::Genome polynomial_mutation_int(const genome::Genome &g, double eta, double prob,
                                                     Rng &rng);

/**
 * Keeps the first individual of every decoded architecture and replaces the
 * rest with fresh random genomes that collide neither with the population
 * nor with `existing`. Replacements are unevaluated.
 */
[[nodiscard]] Population eliminate_duplicates(Population pop, Rng &rng, std::size_t max_len,
                                              const Population &existing = {});

/// Fitness of a decoded genome trained under a given seed and episode budget.
using FitnessFn =
    std::function<double(const genome::Genome &, std::uint64_t seed, std::size_t episodes)>;

/// REINFORCE training on `env`, fitness = mean episode reward.
[[nodiscard]] FitnessFn rl_fitness(const envs::EnvSpec &env, const rl::TrainConfig &train);

struct Evaluator {
    FitnessFn fitness;
    double penalty = 0.0; // assigned when fitness throws
};

[[nodiscard]] Evaluator rl_evaluator(const envs::EnvSpec &env, const rl::TrainConfig &train);

/// Evaluation seed for a population slot.
[[nodiscard]] std::uint64_t eval_seed(std::uint64_t search_seed, std::size_t generation, std::size_t slot);

/// Trains the individual once; failures get the evaluator's penalty.
[[nodiscard]] Individual evaluate(Individual ind, const Evaluator &evaluator, std::size_t episodes,
                                  std::uint64_t seed);

/// Evaluates every unevaluated member on a worker pool; results do not
/// depend on the worker count.
void evaluate_population(Population &pop, const SearchConfig &cfg, std::size_t generation,
                         const Evaluator &evaluator);

struct GenerationResult {
    Population survivors; // sorted by descending fitness
    Population offspring; // every evaluated offspring, in slot order
};

/// Selection, variation, duplicate elimination, evaluation and survival for
/// one generation. `generation` numbers the offspring (1-based).
[[nodiscard]] GenerationResult step_generation(const Population &parents, const SearchConfig &cfg,
                                               std::size_t generation, const Evaluator &evaluator);

/// Survivors of step_generation.
[[nodiscard]] Population nsga2_generation(const Population &parents, const SearchConfig &cfg,
                                          std::size_t generation, const Evaluator &evaluator);

struct GenerationLog {
    std::size_t generation = 0;
    Population population; // survivors, sorted by descending fitness
    Population offspring;  // all evaluated offspring; empty for generation 0
    Individual best;
};

struct SearchReport {
    SearchConfig config;
    std::string env_name;
    rl::TrainConfig train;
    std::vector<GenerationLog> generations;
    Individual best;
};

[[nodiscard]] SearchReport run_search(const SearchConfig &cfg, const envs::EnvSpec &env,
                                      const rl::TrainConfig &train);
[[nodiscard]] SearchReport run_search(const SearchConfig &cfg, const envs::EnvSpec &env,
                                      const rl::TrainConfig &train, const Evaluator &evaluator);

[[nodiscard]] nlohmann::ordered_json to_json(const SearchReport &report);
[[nodiscard]] SearchReport report_from_json(const nlohmann::json &j);

/// `generation,slot,genome,fitness` rows for every survivor.
void write_generations_csv(std::ostream &os, const SearchReport &report);

} // namespace eqas::search
