#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "eqas/envs.hpp"
#include "eqas/reinforce.hpp"
#include "eqas/search.hpp"

namespace eqas::config {

/**
 * Everything a command needs. Loaded from an INI-style file:
 *
 *   [run]     env, seed, out, workers
 *   [env]     reward_shaping (height | standard, MountainCar only)
 *   [search]  pop_size, generations, max_len, episode_factor, base_episodes,
 *             crossover_prob, mutation_prob, mutation_eta
 *   [train]   episodes, batch_size, lr_theta, lr_lambda, lr_weights, gamma,
 *             use_baseline, beta, preprocessing (arctan | identity)
 *
 * Only run.env is required; everything else falls back to the per-environment
 * defaults.
 */
struct RunConfig {
    envs::EnvSpec env;
    search::SearchConfig search;
    rl::TrainConfig train;
    std::filesystem::path out_dir = "results";
    std::uint64_t seed = 0;
};

/// Defaults for a named environment (learning rates, baseline, episode budget).
[[nodiscard]] RunConfig defaults_for(const std::string &env_name);

/// Throws ConfigError naming the offending `section.key`.
[[nodiscard]] RunConfig parse_run_config(std::istream &in);
[[nodiscard]] RunConfig load_run_config(const std::filesystem::path &path);

/// Propagates the root seed into the search and training configs.
void apply_seed(RunConfig &cfg, std::uint64_t seed);

} // namespace eqas::config
