#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "eqas/genome.hpp"
#include "eqas/quantum.hpp"
#include "eqas/search.hpp"

namespace eqas::analysis {

/// Row p holds the empirical opcode distribution at genome position p.
struct OpFrequencyMatrix {
    quantum::Matrix probs; // positions x 4
};

/**
 * Position-wise opcode distribution over explicitly terminated genomes;
 * positions past a genome's terminator count as opcode 0.
 */
[[nodiscard]] OpFrequencyMatrix op_frequency(std::span<const genome::Genome> genomes);

/// Trailing moving average: out[t] = mean(x[max(0, t - window + 1) .. t]).
[[nodiscard]] std::vector<double> smooth(std::span<const double> curve, std::size_t window);

/// Best-fitness individuals with pairwise distinct architectures across every
/// population and offspring set of the report, at most k of them.
[[nodiscard]] std::vector<search::Individual> top_k(const search::SearchReport &report, std::size_t k);

/// `position,p_measure,p_variational,p_encoding,p_entangle`.
void write_frequency_csv(std::ostream &os, const OpFrequencyMatrix &freq);

} // namespace eqas::analysis
