#include "eqas/quantum.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "eqas/errors.hpp"

namespace eqas::quantum {

namespace {

constexpr Complex kI{0.0, 1.0};

// Visits every pair (i0, i1) of basis indices differing only in `mask`, with
// the bit clear in i0.
template <typename F> void for_each_pair(std::size_t size, std::uint64_t mask, F &&f) {
    for (std::uint64_t i = 0; i < size; ++i) {
        if ((i & mask) == 0) {
            f(i, i | mask);
        }
    }
}

} // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigError("n_qubits must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                          std::to_string(n_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const auto size = amplitudes.size();
    if (size < 2 || !std::has_single_bit(size)) {
        throw ConfigError("amplitude count must be a power of two >= 2");
    }
    StateVector sv;
    sv.n_qubits_ = static_cast<std::size_t>(std::countr_zero(size));
    if (sv.n_qubits_ > kMaxQubits) {
        throw ConfigError("too many qubits for dense simulation");
    }
    sv.amps_ = std::move(amplitudes);
    return sv;
}

double StateVector::norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw IndexError("qubit " + std::to_string(qubit) + " out of range for " +
                         std::to_string(n_qubits_) + "-qubit state");
    }
}

void StateVector::rotate(Axis axis, std::size_t qubit, double angle) {
    check_qubit(qubit);
    if (!std::isfinite(angle)) {
        throw NumericError("non-finite rotation angle");
    }
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const auto mask = bit(qubit);
    switch (axis) {
    case Axis::X:
        for_each_pair(amps_.size(), mask, [&](auto i0, auto i1) {
            const Complex a0 = amps_[i0];
            const Complex a1 = amps_[i1];
            amps_[i0] = c * a0 - kI * s * a1;
            amps_[i1] = -kI * s * a0 + c * a1;
        });
        break;
    case Axis::Y:
        for_each_pair(amps_.size(), mask, [&](auto i0, auto i1) {
            const Complex a0 = amps_[i0];
            const Complex a1 = amps_[i1];
            amps_[i0] = c * a0 - s * a1;
            amps_[i1] = s * a0 + c * a1;
        });
        break;
    case Axis::Z: {
        const Complex p0{c, -s};
        const Complex p1{c, s};
        for_each_pair(amps_.size(), mask, [&](auto i0, auto i1) {
            amps_[i0] *= p0;
            amps_[i1] *= p1;
        });
        break;
    }
    }
}

void StateVector::cz(std::size_t a, std::size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw IndexError("CZ requires two distinct qubits");
    }
    const auto mask = bit(a) | bit(b);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) {
            amps_[i] = -amps_[i];
        }
    }
}

void StateVector::pauli(Axis axis, std::size_t qubit) {
    check_qubit(qubit);
    const auto mask = bit(qubit);
    switch (axis) {
    case Axis::X:
        for_each_pair(amps_.size(), mask, [&](auto i0, auto i1) { std::swap(amps_[i0], amps_[i1]); });
        break;
    case Axis::Y:
        for_each_pair(amps_.size(), mask, [&](auto i0, auto i1) {
            const Complex a0 = amps_[i0];
            amps_[i0] = -kI * amps_[i1];
            amps_[i1] = kI * a0;
        });
        break;
    case Axis::Z:
        for_each_pair(amps_.size(), mask, [&](auto, auto i1) { amps_[i1] = -amps_[i1]; });
        break;
    }
}

StateVector init_state(std::size_t n_qubits) { return StateVector(n_qubits); }

StateVector apply_rotation(StateVector state, Axis axis, std::size_t qubit, double angle) {
    state.rotate(axis, qubit, angle);
    return state;
}

StateVector apply_cz(StateVector state, std::size_t a, std::size_t b) {
    state.cz(a, b);
    return state;
}

Complex inner(std::span<const Complex> lhs, std::span<const Complex> rhs) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        acc += std::conj(lhs[i]) * rhs[i];
    }
    return acc;
}

void ZObservable::validate(std::size_t n_qubits) const {
    std::uint64_t seen = 0;
    for (auto q : qubits) {
        if (q >= n_qubits) {
            throw IndexError("observable qubit " + std::to_string(q) + " out of range");
        }
        const std::uint64_t b = std::uint64_t{1} << q;
        if (seen & b) {
            throw IndexError("observable qubit " + std::to_string(q) + " repeated");
        }
        seen |= b;
    }
}

std::uint64_t ZObservable::mask(std::size_t n_qubits) const {
    validate(n_qubits);
    std::uint64_t m = 0;
    for (auto q : qubits) {
        m |= std::uint64_t{1} << (n_qubits - 1 - q);
    }
    return m;
}

double expectation(const StateVector &state, const ZObservable &obs) {
    const auto mask = obs.mask(state.n_qubits());
    const auto amps = state.amplitudes();
    double acc = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        acc += (std::popcount(i & mask) & 1) ? -p : p;
    }
    return acc;
}

void apply_observable(StateVector &state, const ZObservable &obs) {
    const auto mask = obs.mask(state.n_qubits());
    auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (std::popcount(i & mask) & 1) {
            amps[i] = -amps[i];
        }
    }
}

namespace {

GateKind kind_for(Axis axis) {
    switch (axis) {
    case Axis::X:
        return GateKind::RotX;
    case Axis::Y:
        return GateKind::RotY;
    case Axis::Z:
        return GateKind::RotZ;
    }
    return GateKind::RotX;
}

} // namespace

GateOp GateOp::rotation(Axis axis, std::size_t qubit, TrainableTheta src) {
    return GateOp{kind_for(axis), qubit, 0, src};
}

GateOp GateOp::rotation(Axis axis, std::size_t qubit, ScaledData src) {
    return GateOp{kind_for(axis), qubit, 0, src};
}

GateOp GateOp::cz(std::size_t a, std::size_t b) { return GateOp{GateKind::CZ, a, b, {}}; }

Axis GateOp::axis() const {
    switch (kind) {
    case GateKind::RotX:
        return Axis::X;
    case GateKind::RotY:
        return Axis::Y;
    case GateKind::RotZ:
        return Axis::Z;
    case GateKind::CZ:
        break;
    }
    throw UsageError("CZ has no rotation axis");
}

double resolve_angle(const GateOp &op, const CircuitInputs &inputs) {
    if (const auto *t = std::get_if<TrainableTheta>(&op.angle_source)) {
        if (t->index >= inputs.theta.size()) {
            throw DecodeError("theta index " + std::to_string(t->index) + " unresolved (|theta| = " +
                              std::to_string(inputs.theta.size()) + ")");
        }
        return inputs.theta[t->index];
    }
    if (const auto *d = std::get_if<ScaledData>(&op.angle_source)) {
        if (d->lambda_index >= inputs.lambda.size() || d->data_index >= inputs.data.size()) {
            throw DecodeError("scaled-data index (" + std::to_string(d->lambda_index) + ", " +
                              std::to_string(d->data_index) + ") unresolved");
        }
        return inputs.lambda[d->lambda_index] * inputs.data[d->data_index];
    }
    throw DecodeError("rotation gate without an angle source");
}

void validate_circuit(std::span<const GateOp> ops, const CircuitInputs &inputs,
                      std::size_t n_qubits) {
    for (const auto &op : ops) {
        if (op.target >= n_qubits) {
            throw IndexError("gate target " + std::to_string(op.target) + " out of range");
        }
        if (op.is_rotation()) {
            (void)resolve_angle(op, inputs);
        } else {
            if (op.partner >= n_qubits || op.partner == op.target) {
                throw IndexError("invalid CZ partner " + std::to_string(op.partner));
            }
            if (!std::holds_alternative<std::monostate>(op.angle_source)) {
                throw DecodeError("CZ carries no angle");
            }
        }
    }
}

namespace {

void apply_gate(StateVector &state, const GateOp &op, const CircuitInputs &inputs, double sign) {
    if (op.is_rotation()) {
        state.rotate(op.axis(), op.target, sign * resolve_angle(op, inputs));
    } else {
        state.cz(op.target, op.partner);
    }
}

} // namespace

StateVector run_circuit(std::span<const GateOp> ops, const CircuitInputs &inputs,
                        std::size_t n_qubits) {
    StateVector state(n_qubits);
    validate_circuit(ops, inputs, n_qubits);
    for (const auto &op : ops) {
        apply_gate(state, op, inputs, 1.0);
    }
    return state;
}

CircuitGradients gradients(std::span<const GateOp> ops, const CircuitInputs &inputs,
                           std::span<const ZObservable> observables, std::size_t n_qubits) {
    StateVector psi = run_circuit(ops, inputs, n_qubits);

    const std::size_t n_obs = observables.size();
    CircuitGradients out;
    out.expectations.resize(n_obs);
    out.d_theta = Matrix(n_obs, inputs.theta.size());
    out.d_lambda = Matrix(n_obs, inputs.lambda.size());

    std::vector<StateVector> bras;
    bras.reserve(n_obs);
    for (std::size_t k = 0; k < n_obs; ++k) {
        out.expectations[k] = expectation(psi, observables[k]);
        bras.push_back(psi);
        apply_observable(bras.back(), observables[k]);
    }

    // Invariant at step i (walking backwards): psi = U_i...U_1|0>, bras[k] =
    // U_{i+1}^dag...U_N^dag O_k psi_N.
    StateVector scratch = psi;
    for (std::size_t i = ops.size(); i-- > 0;) {
        const auto &op = ops[i];
        if (op.is_rotation()) {
            scratch = psi;
            scratch.pauli(op.axis(), op.target);
            for (std::size_t k = 0; k < n_obs; ++k) {
                const double g = inner(bras[k].amplitudes(), scratch.amplitudes()).imag();
                if (const auto *t = std::get_if<TrainableTheta>(&op.angle_source)) {
                    out.d_theta(k, t->index) += g;
                } else {
                    const auto &d = std::get<ScaledData>(op.angle_source);
                    out.d_lambda(k, d.lambda_index) += g * inputs.data[d.data_index];
                }
            }
        }
        apply_gate(psi, op, inputs, -1.0);
        for (auto &bra : bras) {
            apply_gate(bra, op, inputs, -1.0);
        }
    }
    return out;
}

} // namespace eqas::quantum
