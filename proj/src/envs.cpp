#include "eqas/envs.hpp"

#include <algorithm>
#include <cmath>

#include "eqas/errors.hpp"
#include "eqas/random.hpp"

namespace eqas::envs {

double EnvSpec::min_episode_return() const {
    switch (kind) {
    case EnvKind::CartPole:
        return 1.0;
    case EnvKind::MountainCar:
        return (shaping == RewardShaping::Height ? -0.9 : -1.0) * static_cast<double>(max_steps);
    }
    return 0.0;
}

double EnvSpec::max_episode_return() const {
    switch (kind) {
    case EnvKind::CartPole:
        return static_cast<double>(max_steps);
    case EnvKind::MountainCar:
        return shaping == RewardShaping::Height ? 0.0 : -1.0;
    }
    return 0.0;
}

EnvSpec EnvSpec::cartpole() { return EnvSpec{"CartPole-v1", EnvKind::CartPole, 4, 2, 500, 1.0}; }

EnvSpec EnvSpec::mountain_car(RewardShaping shaping) {
    return EnvSpec{"MountainCar-v0", EnvKind::MountainCar, 2, 3, 200, 1.0, shaping};
}

EnvSpec EnvSpec::from_name(const std::string &name) {
    if (name == "CartPole-v1") {
        return cartpole();
    }
    if (name == "MountainCar-v0") {
        return mountain_car();
    }
    throw ConfigError("unknown environment '" + name + "' (expected CartPole-v1 or MountainCar-v0)");
}

double height(double position) { return std::sin(3.0 * position) * 0.45 + 0.55; }

std::vector<double> Environment::reset(std::uint64_t seed) {
    set_state(sample_initial(seed));
    return state_;
}

void Environment::set_state(std::vector<double> state) {
    if (state.size() != spec_.state_dim) {
        throw ConfigError("state dimension mismatch for " + spec_.name);
    }
    state_ = std::move(state);
    steps_ = 0;
    finished_ = false;
}

StepResult Environment::step(std::size_t action) {
    if (finished_) {
        throw UsageError("step() on a finished episode; call reset() first");
    }
    if (action >= spec_.n_actions) {
        throw UsageError("action " + std::to_string(action) + " out of range for " + spec_.name);
    }
    const auto [reward, terminated] = advance(action);
    ++steps_;
    StepResult r;
    r.next_state = state_;
    r.reward = reward;
    r.terminated = terminated;
    r.truncated = !terminated && steps_ >= spec_.max_steps;
    finished_ = r.done();
    return r;
}

std::vector<double> CartPole::sample_initial(std::uint64_t seed) const {
    Rng rng(seed);
    std::vector<double> s(4);
    for (auto &x : s) {
        x = uniform(rng, -0.05, 0.05);
    }
    return s;
}

std::pair<double, bool> CartPole::advance(std::size_t action) {
    double x = state_[0];
    double x_dot = state_[1];
    double theta = state_[2];
    double theta_dot = state_[3];

    const double force = action == 1 ? kForceMag : -kForceMag;
    const double costheta = std::cos(theta);
    const double sintheta = std::sin(theta);
    const double temp = (force + kPoleMassLength * (theta_dot * theta_dot) * sintheta) / kTotalMass;
    const double thetaacc = (kGravity * sintheta - costheta * temp) /
                            (kHalfLength * (4.0 / 3.0 - kPoleMass * (costheta * costheta) / kTotalMass));
    const double xacc = temp - kPoleMassLength * thetaacc * costheta / kTotalMass;

    x = x + kTau * x_dot;
    x_dot = x_dot + kTau * xacc;
    theta = theta + kTau * theta_dot;
    theta_dot = theta_dot + kTau * thetaacc;
    state_ = {x, x_dot, theta, theta_dot};

    const bool terminated =
        x < -kXThreshold || x > kXThreshold || theta < -kThetaThreshold || theta > kThetaThreshold;
    return {1.0, terminated};
}

std::vector<double> MountainCar::sample_initial(std::uint64_t seed) const {
    Rng rng(seed);
    return {uniform(rng, -0.6, -0.4), 0.0};
}

std::pair<double, bool> MountainCar::advance(std::size_t action) {
    double position = state_[0];
    double velocity = state_[1];
    velocity += (static_cast<double>(action) - 1.0) * kForce + std::cos(3.0 * position) * (-kGravity);
    velocity = std::clamp(velocity, -kMaxSpeed, kMaxSpeed);
    position += velocity;
    position = std::clamp(position, kMinPosition, kMaxPosition);
    if (position == kMinPosition && velocity < 0.0) {
        velocity = 0.0;
    }
    state_ = {position, velocity};
    const bool terminated = position >= kGoalPosition && velocity >= 0.0;
    const double reward = spec().shaping == RewardShaping::Height ? -1.0 + height(position) : -1.0;
    return {reward, terminated};
}

std::unique_ptr<Environment> make_environment(const EnvSpec &spec) {
    switch (spec.kind) {
    case EnvKind::CartPole:
        return std::make_unique<CartPole>();
    case EnvKind::MountainCar:
        return std::make_unique<MountainCar>(spec.shaping);
    }
    throw ConfigError("unsupported environment kind");
}

} // namespace eqas::envs
