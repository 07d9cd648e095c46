#include "eqas/analysis.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "eqas/errors.hpp"
#include "eqas/format.hpp"

namespace eqas::analysis {

OpFrequencyMatrix op_frequency(std::span<const genome::Genome> genomes) {
    if (genomes.empty()) {
        throw UsageError("op_frequency needs at least one genome");
    }
    std::vector<std::vector<genome::OpCode>> keys;
    keys.reserve(genomes.size());
    std::size_t rows = 0;
    for (const auto &g : genomes) {
        keys.push_back(genome::architecture_key(g));
        rows = std::max(rows, keys.back().size());
    }
    OpFrequencyMatrix out{quantum::Matrix(rows, genome::kNumOpCodes)};
    for (const auto &key : keys) {
        for (std::size_t p = 0; p < rows; ++p) {
            const auto code = p < key.size() ? genome::to_int(key[p]) : 0;
            out.probs(p, static_cast<std::size_t>(code)) += 1.0;
        }
    }
    for (auto &x : out.probs.data) {
        x /= static_cast<double>(keys.size());
    }
    return out;
}

std::vector<double> smooth(std::span<const double> curve, std::size_t window) {
    if (window == 0) {
        throw UsageError("smoothing window must be at least 1");
    }
    std::vector<double> out(curve.size());
    for (std::size_t t = 0; t < curve.size(); ++t) {
        const std::size_t first = t + 1 >= window ? t + 1 - window : 0;
        double acc = 0.0;
        for (std::size_t i = first; i <= t; ++i) {
            acc += curve[i];
        }
        out[t] = acc / static_cast<double>(t + 1 - first);
    }
    return out;
}

std::vector<search::Individual> top_k(const search::SearchReport &report, std::size_t k) {
    std::vector<search::Individual> all;
    for (const auto &log : report.generations) {
        all.insert(all.end(), log.population.begin(), log.population.end());
        all.insert(all.end(), log.offspring.begin(), log.offspring.end());
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const auto &a, const auto &b) { return *a.fitness > *b.fitness; });
    std::vector<search::Individual> out;
    std::set<std::vector<genome::OpCode>> seen;
    for (auto &ind : all) {
        if (out.size() == k) {
            break;
        }
        if (seen.insert(genome::architecture_key(ind.genome)).second) {
            out.push_back(std::move(ind));
        }
    }
    return out;
}

void write_frequency_csv(std::ostream &os, const OpFrequencyMatrix &freq) {
    os << "position,p_measure,p_variational,p_encoding,p_entangle\n";
    for (std::size_t p = 0; p < freq.probs.rows; ++p) {
        os << p;
        for (std::size_t c = 0; c < freq.probs.cols; ++c) {
            os << ',' << format_double(freq.probs(p, c));
        }
        os << '\n';
    }
}

} // namespace eqas::analysis
