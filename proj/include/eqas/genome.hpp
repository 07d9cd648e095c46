#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eqas/quantum.hpp"
#include "eqas/random.hpp"

namespace eqas::genome {

enum class OpCode : std::uint8_t {
    Measurement = 0,  // variational block followed by readout; terminates decoding
    Variational = 1,  // Rx, Ry, Rz with trainable angles on every qubit
    DataEncoding = 2, // Rx(lambda_q * d_q) on every qubit
    Entanglement = 3, // circular CZ chain
};

inline constexpr std::size_t kNumOpCodes = 4;
inline constexpr std::size_t kDefaultMaxLength = 30;

[[nodiscard]] OpCode opcode_from_int(int value);
[[nodiscard]] constexpr int to_int(OpCode c) noexcept { return static_cast<int>(c); }

class Genome {
  public:
    Genome() = default;
    /// Throws DecodeError when empty, too long, or holding codes outside 0..3.
    Genome(std::vector<OpCode> codes, std::size_t max_length = kDefaultMaxLength);
    static Genome from_ints(const std::vector<int> &codes,
                            std::size_t max_length = kDefaultMaxLength);

    /// Hyphen-joined integers, e.g. "1-2-3-0".
    static Genome parse(std::string_view text, std::size_t max_length = kDefaultMaxLength);
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::vector<int> to_ints() const;

    [[nodiscard]] const std::vector<OpCode> &codes() const noexcept { return codes_; }
    [[nodiscard]] std::size_t size() const noexcept { return codes_.size(); }
    [[nodiscard]] std::size_t max_length() const noexcept { return max_length_; }
    [[nodiscard]] bool has_terminator() const noexcept;

    friend bool operator==(const Genome &, const Genome &) = default;

  private:
    std::vector<OpCode> codes_;
    std::size_t max_length_ = kDefaultMaxLength;
};

/// Truncates after the first Measurement code; terminator-free genomes pass through.
[[nodiscard]] Genome canonicalize(const Genome &g);

enum class Block { Variational, DataEncoding, Entanglement };

/// Decoded phenotype: non-terminal blocks in order, followed implicitly by
/// one terminal Measurement (variational block + readout).
struct Architecture {
    std::vector<Block> blocks;
    std::size_t n_qubits = 0;

    [[nodiscard]] std::size_t count(Block b) const noexcept;
    friend bool operator==(const Architecture &, const Architecture &) = default;
};

/**
 * Maps codes before the first 0 to blocks. A terminator-free genome gets an
 * implicit Measurement at its last slot when it fills max_length (that slot is
 * absorbed into the terminal), otherwise the Measurement is appended after it.
 */
[[nodiscard]] Architecture decode(const Genome &g, std::size_t n_qubits);

/// Explicitly terminated code sequence identifying the decoded architecture.
[[nodiscard]] std::vector<OpCode> architecture_key(const Genome &g);

/// Gate-level expansion of an architecture with dense parameter indices.
struct Circuit {
    std::vector<quantum::GateOp> ops;
    std::size_t n_qubits = 0;
    std::size_t n_theta = 0;
    std::size_t n_lambda = 0;
};

[[nodiscard]] Circuit expand(const Architecture &arch);

struct ParamShape {
    std::size_t n_theta = 0;
    std::size_t n_lambda = 0;
    std::size_t n_weights = 0;
    friend bool operator==(const ParamShape &, const ParamShape &) = default;
};

[[nodiscard]] ParamShape param_shape(const Architecture &arch, std::size_t n_actions,
                                     std::size_t obs_per_action);

/// Number of distinct architectures reachable with genomes of length max_len.
[[nodiscard]] boost::multiprecision::cpp_int search_space_size(std::size_t max_len);

/// max_len i.i.d. uniform codes, not canonicalized (the evolutionary loop keeps
/// the inert tail after the terminator).
[[nodiscard]] Genome random_codes(Rng &rng, std::size_t max_len);

/// random_codes followed by canonicalize.
[[nodiscard]] Genome random_genome(Rng &rng, std::size_t max_len);

/// `depth` repetitions of (variational, entanglement, encoding) then the terminal.
[[nodiscard]] Genome alternating_layer_genome(std::size_t depth);

/// Parses a genome whose max_length is max(kDefaultMaxLength, its own length).
[[nodiscard]] Genome parse_unbounded(std::string_view text);

[[nodiscard]] std::string_view block_name(Block b) noexcept;

} // namespace eqas::genome
