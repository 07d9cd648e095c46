#include "eqas/genome.hpp"

#include <algorithm>
#include <charconv>

#include "eqas/errors.hpp"

namespace eqas::genome {

OpCode opcode_from_int(int value) {
    if (value < 0 || value >= static_cast<int>(kNumOpCodes)) {
        throw DecodeError("opcode " + std::to_string(value) + " outside {0,1,2,3}");
    }
    return static_cast<OpCode>(value);
}

Genome::Genome(std::vector<OpCode> codes, std::size_t max_length)
    : codes_(std::move(codes)), max_length_(max_length) {
    if (max_length_ < 1) {
        throw DecodeError("max_length must be at least 1");
    }
    if (codes_.empty()) {
        throw DecodeError("empty genome");
    }
    if (codes_.size() > max_length_) {
        throw DecodeError("genome length " + std::to_string(codes_.size()) +
                          " exceeds max_length " + std::to_string(max_length_));
    }
    for (auto c : codes_) {
        (void)opcode_from_int(to_int(c));
    }
}

Genome Genome::from_ints(const std::vector<int> &codes, std::size_t max_length) {
    std::vector<OpCode> out;
    out.reserve(codes.size());
    for (int c : codes) {
        out.push_back(opcode_from_int(c));
    }
    return Genome(std::move(out), max_length);
}

Genome Genome::parse(std::string_view text, std::size_t max_length) {
    std::vector<int> ints;
    std::size_t pos = 0;
    while (true) {
        const auto dash = text.find('-', pos);
        const auto token = text.substr(pos, dash == std::string_view::npos ? text.npos : dash - pos);
        int value = 0;
        const auto *first = token.data();
        const auto *last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc{} || ptr != last) {
            throw DecodeError("malformed genome string '" + std::string(text) + "'");
        }
        ints.push_back(value);
        if (dash == std::string_view::npos) {
            break;
        }
        pos = dash + 1;
    }
    return from_ints(ints, max_length);
}

std::string Genome::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < codes_.size(); ++i) {
        if (i) {
            out += '-';
        }
        out += static_cast<char>('0' + to_int(codes_[i]));
    }
    return out;
}

std::vector<int> Genome::to_ints() const {
    std::vector<int> out;
    out.reserve(codes_.size());
    for (auto c : codes_) {
        out.push_back(to_int(c));
    }
    return out;
}

bool Genome::has_terminator() const noexcept {
    return std::find(codes_.begin(), codes_.end(), OpCode::Measurement) != codes_.end();
}

Genome canonicalize(const Genome &g) {
    const auto &codes = g.codes();
    const auto it = std::find(codes.begin(), codes.end(), OpCode::Measurement);
    if (it == codes.end()) {
        return g;
    }
    return Genome(std::vector<OpCode>(codes.begin(), it + 1), g.max_length());
}

std::size_t Architecture::count(Block b) const noexcept {
    return static_cast<std::size_t>(std::count(blocks.begin(), blocks.end(), b));
}

namespace {

Block block_for(OpCode c) {
    switch (c) {
    case OpCode::Variational:
        return Block::Variational;
    case OpCode::DataEncoding:
        return Block::DataEncoding;
    case OpCode::Entanglement:
        return Block::Entanglement;
    case OpCode::Measurement:
        break;
    }
    throw DecodeError("measurement is not a body block");
}

OpCode code_for(Block b) {
    switch (b) {
    case Block::Variational:
        return OpCode::Variational;
    case Block::DataEncoding:
        return OpCode::DataEncoding;
    case Block::Entanglement:
        return OpCode::Entanglement;
    }
    return OpCode::Measurement;
}

} // namespace

Architecture decode(const Genome &g, std::size_t n_qubits) {
    if (g.size() == 0) {
        throw DecodeError("cannot decode an empty genome");
    }
    if (n_qubits < 1 || n_qubits > quantum::kMaxQubits) {
        throw ConfigError("n_qubits out of range for decoding");
    }
    const auto &codes = g.codes();
    auto end = std::find(codes.begin(), codes.end(), OpCode::Measurement);
    if (end == codes.end() && g.size() == g.max_length()) {
        // The final slot hosts the implicit terminal measurement.
        end = codes.end() - 1;
    }
    Architecture arch;
    arch.n_qubits = n_qubits;
    for (auto it = codes.begin(); it != end; ++it) {
        arch.blocks.push_back(block_for(*it));
    }
    return arch;
}

std::vector<OpCode> architecture_key(const Genome &g) {
    const auto arch = decode(g, 1);
    std::vector<OpCode> key;
    key.reserve(arch.blocks.size() + 1);
    for (auto b : arch.blocks) {
        key.push_back(code_for(b));
    }
    key.push_back(OpCode::Measurement);
    return key;
}

namespace {

void append_variational(Circuit &c) {
    using quantum::Axis;
    for (std::size_t q = 0; q < c.n_qubits; ++q) {
        for (auto axis : {Axis::X, Axis::Y, Axis::Z}) {
            c.ops.push_back(quantum::GateOp::rotation(axis, q, quantum::TrainableTheta{c.n_theta++}));
        }
    }
}

void append_encoding(Circuit &c) {
    for (std::size_t q = 0; q < c.n_qubits; ++q) {
        c.ops.push_back(
            quantum::GateOp::rotation(quantum::Axis::X, q, quantum::ScaledData{c.n_lambda++, q}));
    }
}

void append_entanglement(Circuit &c) {
    const auto n = c.n_qubits;
    if (n < 2) {
        return;
    }
    if (n == 2) {
        c.ops.push_back(quantum::GateOp::cz(0, 1));
        return;
    }
    for (std::size_t q = 0; q < n; ++q) {
        c.ops.push_back(quantum::GateOp::cz(q, (q + 1) % n));
    }
}

} // namespace

Circuit expand(const Architecture &arch) {
    Circuit c;
    c.n_qubits = arch.n_qubits;
    for (auto b : arch.blocks) {
        switch (b) {
        case Block::Variational:
            append_variational(c);
            break;
        case Block::DataEncoding:
            append_encoding(c);
            break;
        case Block::Entanglement:
            append_entanglement(c);
            break;
        }
    }
    append_variational(c); // terminal measurement block
    return c;
}

ParamShape param_shape(const Architecture &arch, std::size_t n_actions, std::size_t obs_per_action) {
    return ParamShape{
        3 * arch.n_qubits * (arch.count(Block::Variational) + 1),
        arch.n_qubits * arch.count(Block::DataEncoding),
        n_actions * obs_per_action,
    };
}

boost::multiprecision::cpp_int search_space_size(std::size_t max_len) {
    if (max_len < 1) {
        throw ConfigError("max_len must be at least 1");
    }
    const auto body = static_cast<unsigned>(kNumOpCodes - 1);
    boost::multiprecision::cpp_int total = 0;
    boost::multiprecision::cpp_int term = 1;
    for (std::size_t i = 1; i <= max_len; ++i) {
        total += term;
        term *= body;
    }
    return total;
}

Genome random_codes(Rng &rng, std::size_t max_len) {
    if (max_len < 1) {
        throw ConfigError("max_len must be at least 1");
    }
    std::vector<OpCode> codes(max_len);
    for (auto &c : codes) {
        c = static_cast<OpCode>(uniform_index(rng, kNumOpCodes));
    }
    return Genome(std::move(codes), max_len);
}

Genome random_genome(Rng &rng, std::size_t max_len) { return canonicalize(random_codes(rng, max_len)); }

Genome alternating_layer_genome(std::size_t depth) {
    if (depth == 0) {
        throw ConfigError("depth must be at least 1");
    }
    std::vector<OpCode> codes;
    for (std::size_t d = 0; d < depth; ++d) {
        codes.insert(codes.end(), {OpCode::Variational, OpCode::Entanglement, OpCode::DataEncoding});
    }
    codes.push_back(OpCode::Measurement);
    const auto n = codes.size();
    return Genome(std::move(codes), std::max(kDefaultMaxLength, n));
}

Genome parse_unbounded(std::string_view text) {
    const auto n = static_cast<std::size_t>(std::count(text.begin(), text.end(), '-')) + 1;
    return Genome::parse(text, std::max(kDefaultMaxLength, n));
}

std::string_view block_name(Block b) noexcept {
    switch (b) {
    case Block::Variational:
        return "variational";
    case Block::DataEncoding:
        return "data-encoding";
    case Block::Entanglement:
        return "entanglement";
    }
    return "?";
}

} // namespace eqas::genome
