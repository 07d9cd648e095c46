#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace eqas::quantum {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 20;

enum class Axis { X, Y, Z };

/**
 * Dense n-qubit state. Basis index convention: qubit 0 is the most
 * significant bit of the amplitude index, so |01> (qubit 0 = 0, qubit 1 = 1)
 * lives at index 1.
 */
class StateVector {
  public:
    /// |0...0> on n qubits; throws ConfigError outside [1, kMaxQubits].
    explicit StateVector(std::size_t n_qubits);

    /// Wraps existing amplitudes; length must be a power of two.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] double norm_squared() const noexcept;

    /// In-place exp(-i angle P / 2) on `qubit` for P in {X, Y, Z}.
    void rotate(Axis axis, std::size_t qubit, double angle);
    /// In-place controlled-Z; symmetric in (a, b).
    void cz(std::size_t a, std::size_t b);
    /// In-place Pauli P on `qubit` (the generator of the rotation about P).
    void pauli(Axis axis, std::size_t qubit);

    /// Bit mask selecting `qubit` inside a basis index.
    [[nodiscard]] std::uint64_t bit(std::size_t qubit) const noexcept {
        return std::uint64_t{1} << (n_qubits_ - 1 - qubit);
    }

  private:
    StateVector() = default;
    void check_qubit(std::size_t qubit) const;

    std::size_t n_qubits_ = 0;
    std::vector<Complex> amps_;
};

[[nodiscard]] StateVector init_state(std::size_t n_qubits);
[[nodiscard]] StateVector apply_rotation(StateVector state, Axis axis, std::size_t qubit,
                                         double angle);
[[nodiscard]] StateVector apply_cz(StateVector state, std::size_t a, std::size_t b);

/// Inner product <lhs|rhs>.
[[nodiscard]] Complex inner(std::span<const Complex> lhs, std::span<const Complex> rhs);

/// Tensor product of Pauli-Z on the listed qubits, identity elsewhere.
struct ZObservable {
    std::vector<std::size_t> qubits;

    /// Throws IndexError on repeated or out-of-range qubits.
    void validate(std::size_t n_qubits) const;
    [[nodiscard]] std::uint64_t mask(std::size_t n_qubits) const;

    friend bool operator==(const ZObservable &, const ZObservable &) = default;
};

[[nodiscard]] double expectation(const StateVector &state, const ZObservable &obs);

/// Applies the Z-string in place (diagonal +-1 phase).
void apply_observable(StateVector &state, const ZObservable &obs);

struct TrainableTheta {
    std::size_t index;
    friend bool operator==(const TrainableTheta &, const TrainableTheta &) = default;
};

/// Angle = lambda[lambda_index] * data[data_index].
struct ScaledData {
    std::size_t lambda_index;
    std::size_t data_index;
    friend bool operator==(const ScaledData &, const ScaledData &) = default;
};

enum class GateKind { RotX, RotY, RotZ, CZ };

struct GateOp {
    GateKind kind = GateKind::RotX;
    std::size_t target = 0;
    std::size_t partner = 0; // CZ only
    std::variant<std::monostate, TrainableTheta, ScaledData> angle_source;

    static GateOp rotation(Axis axis, std::size_t qubit, TrainableTheta src);
    static GateOp rotation(Axis axis, std::size_t qubit, ScaledData src);
    static GateOp cz(std::size_t a, std::size_t b);

    [[nodiscard]] bool is_rotation() const noexcept { return kind != GateKind::CZ; }
    [[nodiscard]] Axis axis() const;

    friend bool operator==(const GateOp &, const GateOp &) = default;
};

/// Parameter and data vectors a circuit's angle sources resolve against.
struct CircuitInputs {
    std::span<const double> theta;
    std::span<const double> lambda;
    std::span<const double> data;
};

/// Resolves the rotation angle of `op`; throws DecodeError on dangling indices.
[[nodiscard]] double resolve_angle(const GateOp &op, const CircuitInputs &inputs);

/// Checks gate qubit indices and angle-source indices against the inputs.
void validate_circuit(std::span<const GateOp> ops, const CircuitInputs &inputs,
                      std::size_t n_qubits);

/// Applies `ops` left to right to |0...0>.
[[nodiscard]] StateVector run_circuit(std::span<const GateOp> ops, const CircuitInputs &inputs,
                                      std::size_t n_qubits);

/// Row-major dense matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double &operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    [[nodiscard]] std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    [[nodiscard]] std::span<const double> row(std::size_t r) const {
        return {data.data() + r * cols, cols};
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;
};

/// Expectations and their exact Jacobians, one row per observable.
struct CircuitGradients {
    std::vector<double> expectations;
    Matrix d_theta;  // observables x |theta|
    Matrix d_lambda; // observables x |lambda|
};

/**
 * Adjoint (reverse-sweep) differentiation of <O_k> for every observable.
 * One forward pass plus one backward pass over the gate list; each rotation
 * contributes Im<lambda|P|psi> to its angle, chained through lambda*data for
 * data-encoding gates.
 */
[[nodiscard]] CircuitGradients gradients(std::span<const GateOp> ops, const CircuitInputs &inputs,
                                         std::span<const ZObservable> observables,
                                         std::size_t n_qubits);

} // namespace eqas::quantum
