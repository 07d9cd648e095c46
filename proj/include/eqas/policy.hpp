#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "eqas/genome.hpp"
#include "eqas/quantum.hpp"

namespace eqas::policy {

using quantum::Matrix;
using quantum::ZObservable;

enum class Preprocessing { Arctan, Identity };

[[nodiscard]] Preprocessing preprocessing_from_string(const std::string &name);
[[nodiscard]] std::string to_string(Preprocessing p);

/// Componentwise arctan (or pass-through); throws NumericError on non-finite input.
[[nodiscard]] std::vector<double> preprocess_state(std::span<const double> raw,
                                                   Preprocessing mode = Preprocessing::Arctan);

/// Observables read out for each action's logit: per_action[a][k] is weighted
/// by weights(a, k).
struct EnvObservables {
    std::vector<std::vector<ZObservable>> per_action;

    [[nodiscard]] std::size_t n_actions() const noexcept { return per_action.size(); }
    [[nodiscard]] std::size_t obs_per_action() const;

    /// Both actions share Z0 Z1 Z2 Z3.
    static EnvObservables cartpole();
    /// Z0, Z0 Z1, Z1 for actions 0, 1, 2.
    static EnvObservables mountain_car();
};

struct PolicyParams {
    std::vector<double> theta;
    std::vector<double> lambda;
    Matrix weights; // n_actions x obs_per_action
    double beta = 1.0;

    /// Throws ConfigError on shape mismatch, NumericError on non-finite entries.
    void validate(const genome::ParamShape &shape, std::size_t n_actions) const;
    [[nodiscard]] bool all_finite() const noexcept;

    friend bool operator==(const PolicyParams &, const PolicyParams &) = default;
};

/// Gradient with respect to each trainable group; same layout as PolicyParams.
struct ParamGrads {
    std::vector<double> theta;
    std::vector<double> lambda;
    Matrix weights;

    static ParamGrads zeros_like(const PolicyParams &p);
    /// this += scale * other
    void axpy(double scale, const ParamGrads &other);
    [[nodiscard]] bool all_finite() const noexcept;
};

/// Probabilities and cached circuit derivatives for one state.
struct Evaluation {
    std::vector<double> probs;
    std::vector<double> unique_expectations;
    quantum::CircuitGradients circuit;
};

/**
 * Softmax-PQC policy: pi(a|s) = softmax_a(beta * sum_k w[a][k] <O_ak>), with
 * the expectations taken on the decoded circuit fed by the preprocessed state.
 */
class SoftmaxPolicy {
  public:
    SoftmaxPolicy(const genome::Architecture &arch, EnvObservables obs,
                  Preprocessing preprocessing = Preprocessing::Arctan);

    [[nodiscard]] const genome::Circuit &circuit() const noexcept { return circuit_; }
    [[nodiscard]] const EnvObservables &observables() const noexcept { return obs_; }
    [[nodiscard]] std::size_t n_actions() const noexcept { return obs_.n_actions(); }
    [[nodiscard]] genome::ParamShape shape() const;
    [[nodiscard]] Preprocessing preprocessing() const noexcept { return preprocessing_; }

    [[nodiscard]] std::vector<double> action_probs(const PolicyParams &params,
                                                   std::span<const double> raw_state) const;

    /// Forward pass plus circuit Jacobians, reusable for log_prob_grads.
    [[nodiscard]] Evaluation evaluate(const PolicyParams &params,
                                      std::span<const double> raw_state) const;

    [[nodiscard]] ParamGrads log_prob_grads(const PolicyParams &params, const Evaluation &eval,
                                            std::size_t action) const;

    [[nodiscard]] ParamGrads log_prob_grads(const PolicyParams &params,
                                            std::span<const double> raw_state,
                                            std::size_t action) const;

  private:
    [[nodiscard]] std::vector<double> logits(const PolicyParams &params,
                                             std::span<const double> unique_expectations) const;
    void check(const PolicyParams &params, std::span<const double> raw_state) const;

    genome::Circuit circuit_;
    EnvObservables obs_;
    Preprocessing preprocessing_;
    std::vector<ZObservable> unique_obs_;
    std::vector<std::vector<std::size_t>> obs_index_; // [a][k] -> unique_obs_ slot
};

/// Numerically stable softmax.
[[nodiscard]] std::vector<double> softmax(std::span<const double> logits);

} // namespace eqas::policy
