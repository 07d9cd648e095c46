#include "eqas/reinforce.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>

#include "eqas/errors.hpp"
#include "eqas/format.hpp"

namespace eqas::rl {

OptimizerKind optimizer_from_string(const std::string &name) {
    if (name == "sgd") {
        return OptimizerKind::Sgd;
    }
    if (name == "adam") {
        return OptimizerKind::Adam;
    }
    throw ConfigError("unknown optimizer '" + name + "' (expected sgd|adam)");
}

std::string to_string(OptimizerKind k) { return k == OptimizerKind::Adam ? "adam" : "sgd"; }

ReturnScaling return_scaling_from_string(const std::string &name) {
    if (name == "none") {
        return ReturnScaling::None;
    }
    if (name == "standardize") {
        return ReturnScaling::Standardize;
    }
    throw ConfigError("unknown return scaling '" + name + "' (expected none|standardize)");
}

std::string to_string(ReturnScaling r) { return r == ReturnScaling::Standardize ? "standardize" : "none"; }

TrainConfig TrainConfig::defaults_for(const envs::EnvSpec &env) {
    TrainConfig cfg;
    cfg.gamma = env.gamma;
    cfg.optimizer = OptimizerKind::Adam;
    switch (env.kind) {
    case envs::EnvKind::CartPole:
        cfg.episodes = 500;
        cfg.lr_theta = 0.01;
        cfg.lr_lambda = 0.1;
        cfg.lr_weights = 0.1;
        cfg.use_baseline = false;
        cfg.return_scaling = ReturnScaling::Standardize;
        break;
    case envs::EnvKind::MountainCar:
        cfg.episodes = 1000;
        cfg.lr_theta = 0.01;
        cfg.lr_lambda = 0.1;
        cfg.lr_weights = 0.01;
        cfg.use_baseline = true;
        break;
    }
    return cfg;
}

void TrainConfig::validate() const {
    auto positive = [](double v, const char *name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw ConfigError(std::string(name) + " must be a positive finite number");
        }
    };
    positive(lr_theta, "lr_theta");
    positive(lr_lambda, "lr_lambda");
    positive(lr_weights, "lr_weights");
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw ConfigError("gamma must lie in [0, 1]");
    }
    if (batch_size == 0) {
        throw ConfigError("batch_size must be at least 1");
    }
    if (!std::isfinite(beta)) {
        throw ConfigError("beta must be finite");
    }
}

std::vector<double> compute_returns(std::span<const double> rewards, double gamma) {
    std::vector<double> out(rewards.size());
    double acc = 0.0;
    for (std::size_t t = rewards.size(); t-- > 0;) {
        if (!std::isfinite(rewards[t])) {
            throw NumericError("non-finite reward");
        }
        acc = rewards[t] + gamma * acc;
        out[t] = acc;
    }
    return out;
}

policy::PolicyParams init_params(const policy::SoftmaxPolicy &policy, std::uint64_t seed, double beta) {
    const auto shape = policy.shape();
    Rng rng(derive_seed(seed, "init"));
    policy::PolicyParams p;
    p.theta.resize(shape.n_theta);
    for (auto &t : p.theta) {
        t = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    }
    p.lambda.assign(shape.n_lambda, 1.0);
    p.weights = quantum::Matrix(policy.n_actions(), policy.observables().obs_per_action(), 1.0);
    p.beta = beta;
    return p;
}

namespace {

std::size_t sample(std::span<const double> probs, Rng &rng) {
    const double u = uniform01(rng);
    double acc = 0.0;
    for (std::size_t a = 0; a < probs.size(); ++a) {
        acc += probs[a];
        if (u < acc) {
            return a;
        }
    }
    return probs.size() - 1;
}

} // namespace

Trajectory rollout(const policy::SoftmaxPolicy &policy, const policy::PolicyParams &params,
                   envs::Environment &env, std::uint64_t reset_seed, Rng &action_rng) {
    Trajectory traj;
    auto state = env.reset(reset_seed);
    while (true) {
        const auto eval = policy.evaluate(params, state);
        const auto action = sample(eval.probs, action_rng);
        auto result = env.step(action);
        traj.total_reward += result.reward;
        traj.steps.push_back(
            {std::move(state), action, result.reward, policy.log_prob_grads(params, eval, action)});
        if (result.done()) {
            break;
        }
        state = std::move(result.next_state);
    }
    return traj;
}

policy::ParamGrads batch_gradient(const policy::PolicyParams &params, std::span<const Trajectory> batch,
                                  const TrainConfig &cfg) {
    if (batch.empty()) {
        throw UsageError("batch_update needs at least one trajectory");
    }
    std::vector<std::vector<double>> returns;
    returns.reserve(batch.size());
    for (const auto &traj : batch) {
        std::vector<double> rewards;
        rewards.reserve(traj.steps.size());
        for (const auto &s : traj.steps) {
            rewards.push_back(s.reward);
        }
        returns.push_back(compute_returns(rewards, cfg.gamma));
    }

    double shift = 0.0;
    double scale = 1.0;
    if (cfg.return_scaling == ReturnScaling::Standardize) {
        double n = 0.0;
        double sum = 0.0;
        for (const auto &g : returns) {
            for (double x : g) {
                sum += x;
                n += 1.0;
            }
        }
        const double mean = n > 0.0 ? sum / n : 0.0;
        double var = 0.0;
        for (const auto &g : returns) {
            for (double x : g) {
                var += (x - mean) * (x - mean);
            }
        }
        shift = mean;
        scale = 1.0 / (std::sqrt(n > 0.0 ? var / n : 0.0) + 1e-8);
    } else if (cfg.use_baseline) {
        for (const auto &g : returns) {
            shift += g.empty() ? 0.0 : g.front();
        }
        shift /= static_cast<double>(batch.size());
    }

    auto total = policy::ParamGrads::zeros_like(params);
    for (std::size_t b = 0; b < batch.size(); ++b) {
        const auto &steps = batch[b].steps;
        for (std::size_t t = 0; t < steps.size(); ++t) {
            const double advantage = (returns[b][t] - shift) * scale;
            if (advantage != 0.0) {
                total.axpy(advantage, steps[t].grad_log_prob);
            }
        }
    }
    const double inv = 1.0 / static_cast<double>(batch.size());
    for (auto *v : {&total.theta, &total.lambda, &total.weights.data}) {
        for (auto &x : *v) {
            x *= inv;
        }
    }
    if (!total.all_finite()) {
        throw NumericError("non-finite policy gradient; training aborted");
    }
    return total;
}

namespace {

void check_finite(const policy::PolicyParams &p) {
    if (!p.all_finite()) {
        throw NumericError("non-finite parameters after update; training aborted");
    }
}

} // namespace

policy::PolicyParams batch_update(const policy::PolicyParams &params, std::span<const Trajectory> batch,
                                  const TrainConfig &cfg) {
    const auto grad = batch_gradient(params, batch, cfg);
    auto next = params;
    for (std::size_t i = 0; i < next.theta.size(); ++i) {
        next.theta[i] += cfg.lr_theta * grad.theta[i];
    }
    for (std::size_t i = 0; i < next.lambda.size(); ++i) {
        next.lambda[i] += cfg.lr_lambda * grad.lambda[i];
    }
    for (std::size_t i = 0; i < next.weights.data.size(); ++i) {
        next.weights.data[i] += cfg.lr_weights * grad.weights.data[i];
    }
    check_finite(next);
    return next;
}

Adam::Adam(const policy::PolicyParams &shape_like)
    : m_(policy::ParamGrads::zeros_like(shape_like)), v_(policy::ParamGrads::zeros_like(shape_like)) {}

void Adam::step(policy::PolicyParams &params, const policy::ParamGrads &ascent, const TrainConfig &cfg) {
    constexpr double b1 = 0.9;
    constexpr double b2 = 0.999;
    constexpr double eps = 1e-7;
    ++t_;
    const double c1 = 1.0 - std::pow(b1, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(b2, static_cast<double>(t_));
    auto update = [&](std::vector<double> &p, const std::vector<double> &g, std::vector<double> &m,
                      std::vector<double> &v, double lr) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            m[i] = b1 * m[i] + (1.0 - b1) * g[i];
            v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
            p[i] += lr * (m[i] / c1) / (std::sqrt(v[i] / c2) + eps);
        }
    };
    update(params.theta, ascent.theta, m_.theta, v_.theta, cfg.lr_theta);
    update(params.lambda, ascent.lambda, m_.lambda, v_.lambda, cfg.lr_lambda);
    update(params.weights.data, ascent.weights.data, m_.weights.data, v_.weights.data, cfg.lr_weights);
    check_finite(params);
}

policy::EnvObservables observables_for(const envs::EnvSpec &env) {
    switch (env.kind) {
    case envs::EnvKind::CartPole:
        return policy::EnvObservables::cartpole();
    case envs::EnvKind::MountainCar:
        return policy::EnvObservables::mountain_car();
    }
    throw ConfigError("no observables for environment " + env.name);
}

TrainResult train(const genome::Architecture &arch, const envs::EnvSpec &env, const TrainConfig &cfg) {
    cfg.validate();
    if (arch.n_qubits != env.state_dim) {
        throw ConfigError("architecture qubit count does not match " + env.name + " state dimension");
    }
    const policy::SoftmaxPolicy pol(arch, observables_for(env), cfg.preprocessing);
    TrainResult result{init_params(pol, cfg.seed, cfg.beta), {}};
    result.curve.episode_rewards.reserve(cfg.episodes);

    auto environment = envs::make_environment(env);
    Rng action_rng(derive_seed(cfg.seed, "actions"));
    Adam adam(result.params);
    std::vector<Trajectory> batch;
    batch.reserve(cfg.batch_size);
    for (std::size_t e = 0; e < cfg.episodes; ++e) {
        batch.push_back(rollout(pol, result.params, *environment, derive_seed(cfg.seed, "reset", e), action_rng));
        result.curve.episode_rewards.push_back(batch.back().total_reward);
        if (batch.size() == cfg.batch_size || e + 1 == cfg.episodes) {
            if (cfg.optimizer == OptimizerKind::Adam) {
                adam.step(result.params, batch_gradient(result.params, batch, cfg), cfg);
            } else {
                result.params = batch_update(result.params, batch, cfg);
            }
            batch.clear();
        }
    }
    return result;
}

double fitness(const LearningCurve &curve) {
    if (curve.episode_rewards.empty()) {
        throw UsageError("fitness of an empty learning curve");
    }
    const auto &r = curve.episode_rewards;
    return std::accumulate(r.begin(), r.end(), 0.0) / static_cast<double>(r.size());
}

void write_curve_csv(std::ostream &os, const LearningCurve &curve) {
    os << "episode,reward\n";
    for (std::size_t e = 0; e < curve.episode_rewards.size(); ++e) {
        os << e << ',' << format_double(curve.episode_rewards[e]) << '\n';
    }
}

} // namespace eqas::rl
