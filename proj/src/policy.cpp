#include "eqas/policy.hpp"

#include <algorithm>
#include <cmath>

#include "eqas/errors.hpp"

namespace eqas::policy {

Preprocessing preprocessing_from_string(const std::string &name) {
    if (name == "arctan") {
        return Preprocessing::Arctan;
    }
    if (name == "identity") {
        return Preprocessing::Identity;
    }
    throw ConfigError("unknown preprocessing '" + name + "' (expected arctan|identity)");
}

std::string to_string(Preprocessing p) { return p == Preprocessing::Arctan ? "arctan" : "identity"; }

std::vector<double> preprocess_state(std::span<const double> raw, Preprocessing mode) {
    std::vector<double> out(raw.begin(), raw.end());
    for (auto &x : out) {
        if (!std::isfinite(x)) {
            throw NumericError("non-finite state component");
        }
        if (mode == Preprocessing::Arctan) {
            x = std::atan(x);
        }
    }
    return out;
}

std::size_t EnvObservables::obs_per_action() const {
    if (per_action.empty()) {
        return 0;
    }
    const auto k = per_action.front().size();
    for (const auto &row : per_action) {
        if (row.size() != k) {
            throw ConfigError("every action needs the same number of observables");
        }
    }
    return k;
}

EnvObservables EnvObservables::cartpole() {
    const ZObservable all{{0, 1, 2, 3}};
    return EnvObservables{{{all}, {all}}};
}

EnvObservables EnvObservables::mountain_car() {
    return EnvObservables{{{ZObservable{{0}}}, {ZObservable{{0, 1}}}, {ZObservable{{1}}}}};
}

void PolicyParams::validate(const genome::ParamShape &shape, std::size_t n_actions) const {
    if (theta.size() != shape.n_theta) {
        throw ConfigError("theta has " + std::to_string(theta.size()) + " entries, architecture needs " +
                          std::to_string(shape.n_theta));
    }
    if (lambda.size() != shape.n_lambda) {
        throw ConfigError("lambda has " + std::to_string(lambda.size()) +
                          " entries, architecture needs " + std::to_string(shape.n_lambda));
    }
    if (weights.rows != n_actions || weights.rows * weights.cols != shape.n_weights) {
        throw ConfigError("weights shape does not match actions x observables");
    }
    if (!all_finite()) {
        throw NumericError("non-finite policy parameter");
    }
}

namespace {

bool finite(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

} // namespace

bool PolicyParams::all_finite() const noexcept {
    return finite(theta) && finite(lambda) && finite(weights.data) && std::isfinite(beta);
}

ParamGrads ParamGrads::zeros_like(const PolicyParams &p) {
    return ParamGrads{std::vector<double>(p.theta.size(), 0.0), std::vector<double>(p.lambda.size(), 0.0),
                      Matrix(p.weights.rows, p.weights.cols)};
}

void ParamGrads::axpy(double scale, const ParamGrads &other) {
    for (std::size_t i = 0; i < theta.size(); ++i) {
        theta[i] += scale * other.theta[i];
    }
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        lambda[i] += scale * other.lambda[i];
    }
    for (std::size_t i = 0; i < weights.data.size(); ++i) {
        weights.data[i] += scale * other.weights.data[i];
    }
}

bool ParamGrads::all_finite() const noexcept {
    return finite(theta) && finite(lambda) && finite(weights.data);
}

std::vector<double> softmax(std::span<const double> logits) {
    std::vector<double> out(logits.begin(), logits.end());
    if (out.empty()) {
        return out;
    }
    const double top = *std::max_element(out.begin(), out.end());
    double total = 0.0;
    for (auto &x : out) {
        x = std::exp(x - top);
        total += x;
    }
    for (auto &x : out) {
        x /= total;
    }
    return out;
}

SoftmaxPolicy::SoftmaxPolicy(const genome::Architecture &arch, EnvObservables obs,
                             Preprocessing preprocessing)
    : circuit_(genome::expand(arch)), obs_(std::move(obs)), preprocessing_(preprocessing) {
    if (obs_.n_actions() == 0) {
        throw ConfigError("policy needs at least one action");
    }
    const auto k = obs_.obs_per_action();
    if (k == 0) {
        throw ConfigError("each action needs at least one observable");
    }
    obs_index_.resize(obs_.n_actions());
    for (std::size_t a = 0; a < obs_.n_actions(); ++a) {
        for (const auto &o : obs_.per_action[a]) {
            o.validate(circuit_.n_qubits);
            auto it = std::find(unique_obs_.begin(), unique_obs_.end(), o);
            if (it == unique_obs_.end()) {
                unique_obs_.push_back(o);
                it = unique_obs_.end() - 1;
            }
            obs_index_[a].push_back(static_cast<std::size_t>(it - unique_obs_.begin()));
        }
    }
}

genome::ParamShape SoftmaxPolicy::shape() const {
    return {circuit_.n_theta, circuit_.n_lambda, obs_.n_actions() * obs_.obs_per_action()};
}

void SoftmaxPolicy::check(const PolicyParams &params, std::span<const double> raw_state) const {
    params.validate(shape(), n_actions());
    if (raw_state.size() != circuit_.n_qubits) {
        throw ConfigError("state dimension " + std::to_string(raw_state.size()) +
                          " does not match " + std::to_string(circuit_.n_qubits) + " qubits");
    }
}

std::vector<double> SoftmaxPolicy::logits(const PolicyParams &params,
                                          std::span<const double> unique_expectations) const {
    std::vector<double> z(n_actions(), 0.0);
    for (std::size_t a = 0; a < n_actions(); ++a) {
        double acc = 0.0;
        for (std::size_t k = 0; k < obs_index_[a].size(); ++k) {
            acc += params.weights(a, k) * unique_expectations[obs_index_[a][k]];
        }
        z[a] = params.beta * acc;
    }
    return z;
}

std::vector<double> SoftmaxPolicy::action_probs(const PolicyParams &params,
                                                std::span<const double> raw_state) const {
    check(params, raw_state);
    const auto data = preprocess_state(raw_state, preprocessing_);
    const quantum::CircuitInputs inputs{params.theta, params.lambda, data};
    const auto state = quantum::run_circuit(circuit_.ops, inputs, circuit_.n_qubits);
    std::vector<double> ev;
    ev.reserve(unique_obs_.size());
    for (const auto &o : unique_obs_) {
        ev.push_back(quantum::expectation(state, o));
    }
    return softmax(logits(params, ev));
}

Evaluation SoftmaxPolicy::evaluate(const PolicyParams &params, std::span<const double> raw_state) const {
    check(params, raw_state);
    const auto data = preprocess_state(raw_state, preprocessing_);
    const quantum::CircuitInputs inputs{params.theta, params.lambda, data};
    Evaluation eval;
    eval.circuit = quantum::gradients(circuit_.ops, inputs, unique_obs_, circuit_.n_qubits);
    eval.unique_expectations = eval.circuit.expectations;
    eval.probs = softmax(logits(params, eval.unique_expectations));
    return eval;
}

ParamGrads SoftmaxPolicy::log_prob_grads(const PolicyParams &params, const Evaluation &eval,
                                         std::size_t action) const {
    if (action >= n_actions()) {
        throw IndexError("action " + std::to_string(action) + " out of range");
    }
    auto grads = ParamGrads::zeros_like(params);
    // d log p(action) / d logit_b = [b == action] - p_b
    for (std::size_t b = 0; b < n_actions(); ++b) {
        const double dz = (b == action ? 1.0 : 0.0) - eval.probs[b];
        for (std::size_t k = 0; k < obs_index_[b].size(); ++k) {
            const auto slot = obs_index_[b][k];
            grads.weights(b, k) = dz * params.beta * eval.unique_expectations[slot];
            const double chain = dz * params.beta * params.weights(b, k);
            if (chain == 0.0) {
                continue;
            }
            const auto dth = eval.circuit.d_theta.row(slot);
            for (std::size_t i = 0; i < grads.theta.size(); ++i) {
                grads.theta[i] += chain * dth[i];
            }
            const auto dla = eval.circuit.d_lambda.row(slot);
            for (std::size_t i = 0; i < grads.lambda.size(); ++i) {
                grads.lambda[i] += chain * dla[i];
            }
        }
    }
    return grads;
}

ParamGrads SoftmaxPolicy::log_prob_grads(const PolicyParams &params, std::span<const double> raw_state,
                                         std::size_t action) const {
    return log_prob_grads(params, evaluate(params, raw_state), action);
}

} // namespace eqas::policy
