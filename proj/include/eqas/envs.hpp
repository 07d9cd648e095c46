#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace eqas::envs {

enum class EnvKind { CartPole, MountainCar };

/// MountainCar step reward: -1 + height(position) or the unshaped -1.
enum class RewardShaping { Height, Standard };

struct EnvSpec {
    std::string name;
    EnvKind kind = EnvKind::CartPole;
    std::size_t state_dim = 0; // also the qubit count
    std::size_t n_actions = 0;
    std::size_t max_steps = 0;
    double gamma = 1.0;
    RewardShaping shaping = RewardShaping::Height;

    /// Bounds on a single episode's total reward.
    [[nodiscard]] double min_episode_return() const;
    [[nodiscard]] double max_episode_return() const;

    static EnvSpec cartpole();
    static EnvSpec mountain_car(RewardShaping shaping = RewardShaping::Height);
    /// "CartPole-v1" or "MountainCar-v0"; throws ConfigError otherwise.
    static EnvSpec from_name(const std::string &name);
};

struct StepResult {
    std::vector<double> next_state;
    double reward = 0.0;
    bool terminated = false;
    bool truncated = false;

    [[nodiscard]] bool done() const noexcept { return terminated || truncated; }
};

/// Height of the MountainCar track: sin(3p) * 0.45 + 0.55.
[[nodiscard]] double height(double position);

class Environment {
  public:
    explicit Environment(EnvSpec spec) : spec_(std::move(spec)) {}
    virtual ~Environment() = default;

    [[nodiscard]] const EnvSpec &spec() const noexcept { return spec_; }
    [[nodiscard]] const std::vector<double> &state() const noexcept { return state_; }
    [[nodiscard]] std::size_t steps() const noexcept { return steps_; }
    [[nodiscard]] bool finished() const noexcept { return finished_; }

    /// Samples the initial state from `seed` and starts a new episode.
    std::vector<double> reset(std::uint64_t seed);

    /// Starts a new episode from an explicit state.
    void set_state(std::vector<double> state);

    /// Throws UsageError on a finished episode or an out-of-range action.
    StepResult step(std::size_t action);

  protected:
    virtual std::vector<double> sample_initial(std::uint64_t seed) const = 0;
    /// Advances state_ in place; returns (reward, terminated).
    virtual std::pair<double, bool> advance(std::size_t action) = 0;

    std::vector<double> state_;

  private:
    EnvSpec spec_;
    std::size_t steps_ = 0;
    bool finished_ = true;
};

/// Classic cart-pole with Euler integration; state (x, x_dot, theta, theta_dot).
class CartPole final : public Environment {
  public:
    CartPole() : Environment(EnvSpec::cartpole()) {}

    static constexpr double kGravity = 9.8;
    static constexpr double kCartMass = 1.0;
    static constexpr double kPoleMass = 0.1;
    static constexpr double kTotalMass = kCartMass + kPoleMass;
    static constexpr double kHalfLength = 0.5;
    static constexpr double kPoleMassLength = kPoleMass * kHalfLength;
    static constexpr double kForceMag = 10.0;
    static constexpr double kTau = 0.02;
    static constexpr double kThetaThreshold = 12.0 * 2.0 * 3.141592653589793 / 360.0;
    static constexpr double kXThreshold = 2.4;

  protected:
    std::vector<double> sample_initial(std::uint64_t seed) const override;
    std::pair<double, bool> advance(std::size_t action) override;
};

/// Mountain car; state (position, velocity).
class MountainCar final : public Environment {
  public:
    explicit MountainCar(RewardShaping shaping = RewardShaping::Height)
        : Environment(EnvSpec::mountain_car(shaping)) {}

    static constexpr double kMinPosition = -1.2;
    static constexpr double kMaxPosition = 0.6;
    static constexpr double kMaxSpeed = 0.07;
    static constexpr double kGoalPosition = 0.5;
    static constexpr double kForce = 0.001;
    static constexpr double kGravity = 0.0025;

  protected:
    std::vector<double> sample_initial(std::uint64_t seed) const override;
    std::pair<double, bool> advance(std::size_t action) override;
};

[[nodiscard]] std::unique_ptr<Environment> make_environment(const EnvSpec &spec);

} // namespace eqas::envs
