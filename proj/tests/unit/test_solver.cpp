#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "spdspds/error.hpp"
#include "spdspds/oracle.hpp"
#include "spdspds/solver.hpp"
#include "support/worked_examples.hpp"

using namespace spdspds;
using spdspds::fixtures::worked_examples;
using spdspds::fixtures::to_tableau;

namespace {

CanonicalLP random_lp(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::uniform_int_distribution<int> entry(-3, 3), rhs(-2, 6);
    const std::size_t m = dim(rng), n = dim(rng);
    Matrix a(m, n);
    std::vector<double> b(m), c(n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    for (auto& x : b) x = rhs(rng);
    for (auto& x : c) x = entry(rng);
    return CanonicalLP::from_dense(std::move(a), std::move(b), std::move(c));
}

}  // namespace

class WorkedExampleRun : public ::testing::TestWithParam<std::size_t> {};

TEST_P(WorkedExampleRun, ReachesPrintedTerminalAndClass) {
    const auto& ex = worked_examples()[GetParam()];
    const SolveReport r = solve(to_tableau(ex.initial));
    EXPECT_EQ(r.stop_reason, StopReason::terminal);
    ASSERT_TRUE(r.terminal);
    EXPECT_EQ(*r.terminal, ex.expected);
    EXPECT_LE(fixtures::grid_gap(r.final_tableau, ex.terminal), 1e-9);
    EXPECT_FALSE(r.cycle_flag);
    EXPECT_EQ(classify_terminal(to_tableau(ex.terminal)).terminal, ex.expected);
}

INSTANTIATE_TEST_SUITE_P(All, WorkedExampleRun, ::testing::Range<std::size_t>(0, 6));

TEST(Solve, WorkedExampleOneTakesOnePrimalStep) {
    const SolveReport r = solve(to_tableau(worked_examples()[0].initial));
    EXPECT_EQ(r.iterations, 1u);
    ASSERT_EQ(r.records.size(), 1u);
    EXPECT_EQ(r.records[0].scheme, PivotScheme::PSPPI);
    EXPECT_EQ(r.records[0].row, 0u);
    EXPECT_EQ(r.records[0].col, 0u);
    EXPECT_EQ(r.records[0].signature, "ppPP");
    EXPECT_EQ(r.f, 48.0);
    EXPECT_EQ(r.g, 48.0);
    EXPECT_EQ(r.max_iterations, 200u);
    EXPECT_EQ(r.signatures, (std::vector<std::string>{"ppPP", "PznP"}));
}

TEST(Solve, AlternativesAreOptInAndOptimal) {
    const Tableau t = to_tableau(worked_examples()[0].initial);
    EXPECT_TRUE(solve(t).alternative_optima.empty());
    SolveOptions o;
    o.enumerate_alternatives = true;
    const SolveReport r = solve(t, o);
    ASSERT_FALSE(r.alternative_optima.empty());
    for (const auto& x : r.alternative_optima) {
        EXPECT_NEAR(6 * x[0] + 3 * x[1], 48.0, 1e-12);
    }
    EXPECT_NEAR(r.alternative_optima[0][0], 6.0, 1e-12);
    EXPECT_NEAR(r.alternative_optima[0][1], 4.0, 1e-12);
}

TEST(Solve, IterationLimitStopsWithPartialReport) {
    std::mt19937_64 rng(1);
    SolveOptions o;
    o.max_iterations = 1;
    for (int k = 0; k < 50; ++k) {
        const SolveReport r = solve(random_lp(rng), o);
        EXPECT_LE(r.iterations, 1u);
        if (r.stop_reason == StopReason::iteration_limit) {
            EXPECT_EQ(r.iterations, 1u);
            EXPECT_GT(infeasibility_index(r.final_tableau), 0);
        }
    }
    o.max_iterations = 0;
    EXPECT_THROW(solve(to_tableau(worked_examples()[0].initial), o), ModelError);
}

TEST(Solve, TraceLines) {
    std::ostringstream trace;
    SolveOptions o;
    o.trace = &trace;
    solve(to_tableau(worked_examples()[0].initial), o);
    EXPECT_EQ(trace.str(), "1 PSPPI 1 1 -2 48 2 -48\n");
}

TEST(Solve, ObjectiveMovesMonotonically) {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 400; ++k) {
        const SolveReport r = solve(random_lp(rng));
        for (const auto& rec : r.records) {
            switch (rec.scheme) {
                case PivotScheme::PSPPI:
                case PivotScheme::PTPPI: EXPECT_LE(rec.delta_after, rec.delta_before + 1e-9); break;
                case PivotScheme::DSPNI:
                case PivotScheme::DTPNI: EXPECT_GE(rec.delta_after, rec.delta_before - 1e-9); break;
                default: EXPECT_EQ(rec.delta_after, rec.delta_before);
            }
        }
    }
}

TEST(Solve, OptimalRunsSatisfyDualityAndComplementarity) {
    std::mt19937_64 rng(3);
    int optimal = 0;
    for (int k = 0; k < 400; ++k) {
        const CanonicalLP lp = random_lp(rng);
        const SolveReport r = solve(lp);
        if (!r.f || !r.g) continue;
        ++optimal;
        EXPECT_EQ(*r.f, *r.g);
        const BasicSolution& s = r.basic;
        for (std::size_t j = 0; j < lp.n(); ++j) EXPECT_LE(std::fabs(s.x[j] * s.u[j]), 1e-8);
        for (std::size_t i = 0; i < lp.m(); ++i) EXPECT_LE(std::fabs(s.y[i] * s.v[i]), 1e-8);
    }
    EXPECT_GT(optimal, 50);
}

TEST(Solve, AgreesWithOracle) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 300; ++k) {
        const CanonicalLP lp = random_lp(rng);
        const SolveReport r = solve(lp);
        const OracleVerdict v = oracle_solve(lp);
        ASSERT_TRUE(r.terminal);
        if (r.terminal->primal == Status::Phi) {
            EXPECT_EQ(v.status, OracleVerdict::Status::infeasible) << k;
        } else if (r.certificates.ray_column && r.terminal->primal == Status::Inf) {
            EXPECT_EQ(v.status, OracleVerdict::Status::unbounded) << k;
        } else {
            ASSERT_EQ(v.status, OracleVerdict::Status::optimal) << k;
            EXPECT_NEAR(*r.f, v.value, 1e-8 * std::max(1.0, std::fabs(v.value)));
        }
    }
}

TEST(Classify, WorkedTerminals) {
    const auto c2 = classify_terminal(to_tableau(worked_examples()[1].terminal));
    EXPECT_EQ(c2.terminal, (TerminalClass{Status::F, Status::Inf}));
    EXPECT_EQ(c2.certificates.degenerate_ray_row, 1u);

    const auto c3 = classify_terminal(to_tableau(worked_examples()[2].terminal));
    EXPECT_EQ(c3.terminal, (TerminalClass{Status::Inf, Status::F}));
    EXPECT_EQ(c3.certificates.degenerate_ray_column, 0u);

    const auto c6 = classify_terminal(to_tableau(worked_examples()[5].terminal));
    EXPECT_EQ(c6.terminal, (TerminalClass{Status::Phi, Status::Phi}));
    EXPECT_EQ(c6.certificates.ray_row, 1u);
    EXPECT_EQ(c6.certificates.ray_column, 1u);
}

TEST(Classify, NonTerminalThrows) {
    EXPECT_THROW(classify_terminal(to_tableau(worked_examples()[0].initial)), NotTerminalError);
    EXPECT_FALSE(classify_best_effort(to_tableau(worked_examples()[0].initial)));
}

TEST(Classify, AdmissiblePairs) {
    int admissible_pairs = 0;
    for (Status p : {Status::F, Status::Inf, Status::Phi})
        for (Status d : {Status::F, Status::Inf, Status::Phi}) admissible_pairs += TerminalClass{p, d}.admissible();
    EXPECT_EQ(admissible_pairs, 6);
    EXPECT_FALSE((TerminalClass{Status::Inf, Status::Inf}.admissible()));
}

// Equality aggregation leaves a zero-beta row of nonnegative alphas at every
// optimum; with the transform it is recognised as an artifact.
TEST(Classify, EqualityAggregationIsNotADualRay) {
    GeneralLP p;
    p.sense = Sense::maximize;
    p.add_variable("x1");
    p.add_variable("x2");
    p.objective = {{0, 1.0}, {1, 2.0}};
    p.rows.push_back({"e", Relation::equal, {{0, 1.0}, {1, 1.0}}, 2.0, {}});
    p.rows.push_back({"l", Relation::less_equal, {{1, 1.0}}, 1.0, {}});
    const CanonicalLP lp = canonicalize(p);

    const SolveReport with = solve(lp);
    EXPECT_EQ(with.terminal, (TerminalClass{Status::F, Status::F}));
    EXPECT_NEAR(with.original->objective, 3.0, 1e-12);

    const SolveReport without = solve(initial_tableau(lp));
    EXPECT_EQ(without.terminal, (TerminalClass{Status::F, Status::Inf}));
}

// An empty row with zero right-hand side leaves its dual free to grow at no
// cost; that is a genuine unbounded dual optimal face.
TEST(Classify, EmptyZeroRowKeepsTheDualRay) {
    GeneralLP p;
    p.sense = Sense::maximize;
    p.add_variable("x");
    p.objective = {{0, 1.0}};
    p.rows.push_back({"r", Relation::less_equal, {{0, 1.0}}, 3.0, {}});
    p.rows.push_back({"empty", Relation::less_equal, {}, 0.0, {}});
    const SolveReport r = solve(canonicalize(p));
    EXPECT_EQ(r.terminal, (TerminalClass{Status::F, Status::Inf}));
    EXPECT_NEAR(*r.f, 3.0, 1e-12);
}

TEST(DetectCycle, Membership) {
    EXPECT_TRUE(detect_cycle({"ppPP"}, "ppPP"));
    EXPECT_FALSE(detect_cycle({"ppPP"}, "PznP"));
    EXPECT_FALSE(detect_cycle({}, "ppPP"));
}

TEST(Rays, WorkedCertificatesSubstitute) {
    // Example 4 is primal unbounded: x + theta d stays feasible and gains.
    const auto& ex4 = worked_examples()[3];
    const SolveReport r4 = solve(to_tableau(ex4.initial));
    ASSERT_TRUE(r4.certificates.ray_column);
    const auto d = primal_ray(r4.final_tableau, *r4.certificates.ray_column);
    const Tableau a4 = to_tableau(ex4.initial);
    double gain = 0.0;
    for (std::size_t j = 0; j < 2; ++j) {
        EXPECT_GE(d[j], 0.0);
        gain += a4.gamma(j) * d[j];
    }
    EXPECT_NEAR(gain, r4.final_tableau.gamma(*r4.certificates.ray_column), 1e-12);
    EXPECT_GT(gain, 0.0);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_LE(a4.alpha(i, 0) * d[0] + a4.alpha(i, 1) * d[1], 1e-12);

    // Example 5 is primal infeasible: r >= 0, r.A >= 0, r.b < 0.
    const auto& ex5 = worked_examples()[4];
    const SolveReport r5 = solve(to_tableau(ex5.initial));
    ASSERT_TRUE(r5.certificates.ray_row);
    const auto y = dual_ray(r5.final_tableau, *r5.certificates.ray_row);
    const Tableau a5 = to_tableau(ex5.initial);
    EXPECT_LT(y[0] * a5.beta(0) + y[1] * a5.beta(1), 0.0);
    for (std::size_t j = 0; j < 2; ++j) EXPECT_GE(y[0] * a5.alpha(0, j) + y[1] * a5.alpha(1, j), -1e-12);
    EXPECT_GE(y[0], 0.0);
    EXPECT_GE(y[1], 0.0);
}

TEST(DegenerateEntries, CountsZeros) {
    EXPECT_EQ(degenerate_entries(to_tableau(worked_examples()[0].terminal)), 1u);
    EXPECT_EQ(degenerate_entries(to_tableau(worked_examples()[0].initial)), 0u);
}

TEST(Status, Names) {
    EXPECT_EQ(to_string(Status::Inf), "Inf");
    EXPECT_EQ(symbol(Status::Inf), "∞");
    EXPECT_EQ(symbol(Status::Phi), "Φ");
    EXPECT_EQ(to_string(StopReason::iteration_limit), "iteration_limit");
}
