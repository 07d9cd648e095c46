#include <cmath>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "eqas/analysis.hpp"
#include "eqas/errors.hpp"

using namespace eqas;
using namespace eqas::analysis;
using genome::Genome;

TEST_CASE("operation frequencies", "[analysis]") {
    SECTION("single genome") {
        const std::vector<Genome> gs{Genome::from_ints({1, 0})};
        const auto f = op_frequency(gs);
        REQUIRE(f.probs.rows == 2);
        REQUIRE(f.probs(0, 1) == 1.0);
        REQUIRE(f.probs(1, 0) == 1.0);
    }
    SECTION("two genomes") {
        const std::vector<Genome> gs{Genome::from_ints({1, 0}), Genome::from_ints({2, 0})};
        const auto f = op_frequency(gs);
        REQUIRE(f.probs(0, 1) == 0.5);
        REQUIRE(f.probs(0, 2) == 0.5);
    }
    SECTION("codes after the terminator are ignored") {
        const std::vector<Genome> gs{Genome::from_ints({3, 0, 2, 2}), Genome::from_ints({3, 1, 0})};
        const auto f = op_frequency(gs);
        REQUIRE(f.probs.rows == 3);
        REQUIRE(f.probs(0, 3) == 1.0);
        REQUIRE(f.probs(1, 0) == 0.5);
        REQUIRE(f.probs(1, 1) == 0.5);
        REQUIRE(f.probs(2, 0) == 1.0);
    }
    SECTION("rows are distributions") {
        Rng rng(4);
        std::vector<Genome> gs;
        for (int i = 0; i < 37; ++i) {
            gs.push_back(genome::random_codes(rng, 30));
        }
        const auto f = op_frequency(gs);
        for (std::size_t r = 0; r < f.probs.rows; ++r) {
            double total = 0.0;
            for (double p : f.probs.row(r)) {
                total += p;
            }
            REQUIRE(std::abs(total - 1.0) <= 1e-12);
        }
    }
    REQUIRE_THROWS_AS(op_frequency({}), UsageError);

    std::ostringstream os;
    const std::vector<Genome> gs{Genome::from_ints({1, 0}), Genome::from_ints({2, 0})};
    write_frequency_csv(os, op_frequency(gs));
    REQUIRE(os.str() == "position,p_measure,p_variational,p_encoding,p_entangle\n0,0,0.5,0.5,0\n1,1,0,0,0\n");
}

TEST_CASE("trailing mean smoothing", "[analysis]") {
    const std::vector<double> flat(7, 4.25);
    REQUIRE(smooth(flat, 3) == flat);
    REQUIRE(smooth(std::vector<double>{0, 10}, 2) == std::vector<double>{0, 5});
    const std::vector<double> x{3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9, 3, 2, 3, 8, 4};
    REQUIRE(smooth(x, 1) == x);
    const std::vector<double> expected{
        3.0 / 1,   4.0 / 2,   8.0 / 3,   9.0 / 4,   14.0 / 5,  23.0 / 6,  25.0 / 7,
        31.0 / 8,  36.0 / 9,  39.0 / 10, 41.0 / 10, 48.0 / 10, 53.0 / 10, 59.0 / 10,
        63.0 / 10, 57.0 / 10, 57.0 / 10, 54.0 / 10, 57.0 / 10, 58.0 / 10};
    REQUIRE(smooth(x, 10) == expected);
    REQUIRE(smooth({}, 5).empty());
    REQUIRE_THROWS_AS(smooth(x, 0), UsageError);
}

TEST_CASE("top architectures", "[analysis]") {
    search::SearchReport report;
    auto ind = [](std::vector<int> codes, double f) {
        return search::Individual{Genome::from_ints(codes), f, 0, 0, {}};
    };
    report.generations.push_back({0, {ind({1, 0}, 3.0), ind({2, 0}, 1.0)}, {}, ind({1, 0}, 3.0)});
    report.generations.push_back(
        {1, {ind({1, 0}, 3.0), ind({3, 0}, 2.0)}, {ind({3, 0}, 2.0), ind({1, 0, 2}, 2.5)}, ind({1, 0}, 3.0)});
    const auto top = top_k(report, 10);
    REQUIRE(top.size() == 3);
    REQUIRE(top[0].genome.to_ints() == std::vector<int>{1, 0});
    REQUIRE(top[1].genome.to_ints() == std::vector<int>{3, 0});
    REQUIRE(top[2].genome.to_ints() == std::vector<int>{2, 0});
    REQUIRE(top_k(report, 1).size() == 1);
}
