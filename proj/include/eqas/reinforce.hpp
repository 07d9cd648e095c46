#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "eqas/envs.hpp"
#include "eqas/genome.hpp"
#include "eqas/policy.hpp"

namespace eqas::rl {

enum class OptimizerKind { Sgd, Adam };

/// How Monte Carlo returns are turned into per-step advantages.
enum class ReturnScaling {
    None,       // G_t - b
    Standardize // (G_t - mean) / std over every step of the batch
};

[[nodiscard]] OptimizerKind optimizer_from_string(const std::string &name);
[[nodiscard]] std::string to_string(OptimizerKind k);
[[nodiscard]] ReturnScaling return_scaling_from_string(const std::string &name);
[[nodiscard]] std::string to_string(ReturnScaling r);

struct TrainConfig {
    std::size_t episodes = 500;
    std::size_t batch_size = 10;
    double lr_theta = 0.01;
    double lr_lambda = 0.1;
    double lr_weights = 0.1;
    double gamma = 1.0;
    bool use_baseline = false;
    std::uint64_t seed = 0;
    double beta = 1.0;
    policy::Preprocessing preprocessing = policy::Preprocessing::Arctan;
    OptimizerKind optimizer = OptimizerKind::Sgd;
    ReturnScaling return_scaling = ReturnScaling::None;

    /// Per-environment defaults: learning rates, discount, baseline usage and
    /// optimizer (Adam; standardized returns on CartPole).
    static TrainConfig defaults_for(const envs::EnvSpec &env);
    /// Throws ConfigError naming the offending field.
    void validate() const;
};

struct TrajectoryStep {
    std::vector<double> state;
    std::size_t action = 0;
    double reward = 0.0;
    policy::ParamGrads grad_log_prob;
};

struct Trajectory {
    std::vector<TrajectoryStep> steps;
    double total_reward = 0.0;
};

struct LearningCurve {
    std::vector<double> episode_rewards;
};

/// G_t = sum_{k >= t} gamma^(k - t) r_k.
[[nodiscard]] std::vector<double> compute_returns(std::span<const double> rewards, double gamma);

/// theta ~ U[0, 2pi), lambda = 1, weights = 1.
[[nodiscard]] policy::PolicyParams init_params(const policy::SoftmaxPolicy &policy, std::uint64_t seed,
                                               double beta = 1.0);

/// Plays one episode, sampling actions from the policy.
[[nodiscard]] Trajectory rollout(const policy::SoftmaxPolicy &policy, const policy::PolicyParams &params,
                                 envs::Environment &env, std::uint64_t reset_seed, Rng &action_rng);

/// Ascent direction mean_batch sum_t A_t grad log pi(a_t | s_t) for the
/// configured advantage A_t.
[[nodiscard]] policy::ParamGrads batch_gradient(const policy::PolicyParams &params,
                                                std::span<const Trajectory> batch,
                                                const TrainConfig &cfg);

/// Per-group Adam (beta1 0.9, beta2 0.999, eps 1e-7) in ascent form.
class Adam {
  public:
    explicit Adam(const policy::PolicyParams &shape_like);
    void step(policy::PolicyParams &params, const policy::ParamGrads &ascent, const TrainConfig &cfg);

  private:
    policy::ParamGrads m_;
    policy::ParamGrads v_;
    std::size_t t_ = 0;
};

/**
 * One REINFORCE ascent step over a batch:
 * p += lr_group * mean_batch sum_t (G_t - b) grad log pi(a_t | s_t), with b the
 * batch-mean episode return when use_baseline is set. Throws NumericError if
 * the update is non-finite.
 */
[[nodiscard]] policy::PolicyParams batch_update(const policy::PolicyParams &params,
                                                std::span<const Trajectory> batch,
                                                const TrainConfig &cfg);

struct TrainResult {
    policy::PolicyParams params;
    LearningCurve curve;
};

[[nodiscard]] TrainResult train(const genome::Architecture &arch, const envs::EnvSpec &env,
                                const TrainConfig &cfg);

/// Observables wired to each supported environment.
[[nodiscard]] policy::EnvObservables observables_for(const envs::EnvSpec &env);

/// Mean episode reward; throws UsageError on an empty curve.
[[nodiscard]] double fitness(const LearningCurve &curve);

/// `episode,reward` CSV.
void write_curve_csv(std::ostream &os, const LearningCurve &curve);

} // namespace eqas::rl
