#include <gtest/gtest.h>

#include <algorithm>

#include "spdspds/error.hpp"
#include "spdspds/oracle.hpp"
#include "support/worked_examples.hpp"

using namespace spdspds;
using spdspds::fixtures::worked_examples;
using spdspds::fixtures::to_tableau;

TEST(Oracle, WorkedExampleOneHasTwoOptimalVertices) {
    const OracleVerdict v = oracle_solve(CanonicalLP::from_dense(Matrix{{2, 1}, {1, 1}}, {16, 10}, {6, 3}));
    ASSERT_EQ(v.status, OracleVerdict::Status::optimal);
    EXPECT_DOUBLE_EQ(v.value, 48.0);
    // Vertices (0,0), (8,0), (0,10), (6,4).
    EXPECT_EQ(v.vertices.size(), 4u);
    int optimal = 0;
    for (const auto& x : v.vertices) optimal += 6 * x[0] + 3 * x[1] == 48.0;
    EXPECT_EQ(optimal, 2);
}

TEST(Oracle, EmptyFeasibleSet) {
    const OracleVerdict v = oracle_solve(CanonicalLP::from_dense(Matrix{{1}}, {-1}, {1}));
    EXPECT_EQ(v.status, OracleVerdict::Status::infeasible);
    EXPECT_TRUE(v.vertices.empty());
}

TEST(Oracle, UnboundedRay) {
    const OracleVerdict v = oracle_solve(CanonicalLP::from_dense(Matrix{{-1, 1}}, {1}, {1, 0}));
    EXPECT_EQ(v.status, OracleVerdict::Status::unbounded);
}

TEST(Oracle, FeasibleWithRayButNoGainIsOptimal) {
    const OracleVerdict v = oracle_solve(CanonicalLP::from_dense(Matrix{{-1, 1}}, {1}, {-1, 0}));
    EXPECT_EQ(v.status, OracleVerdict::Status::optimal);
    EXPECT_EQ(v.value, 0.0);
}

TEST(Oracle, SizeGuard) {
    EXPECT_THROW(oracle_solve(CanonicalLP::from_dense(Matrix(12, 13, 1.0), std::vector<double>(12, 1.0),
                                                      std::vector<double>(13, 1.0))),
                 TooLargeError);
}

TEST(Oracle, AgreesWithWorkedExamples) {
    using S = OracleVerdict::Status;
    const S expected[] = {S::optimal, S::optimal, S::optimal, S::unbounded, S::infeasible, S::infeasible};
    for (std::size_t k = 0; k < 6; ++k) {
        const Tableau t = to_tableau(worked_examples()[k].initial);
        const auto lp = CanonicalLP::from_dense(t.alpha(), {t.beta().begin(), t.beta().end()},
                                                {t.gamma().begin(), t.gamma().end()});
        EXPECT_EQ(oracle_solve(lp).status, expected[k]) << worked_examples()[k].name;
    }
}

TEST(SimulateDeltaII, WorkedExampleOne) {
    const Tableau t = to_tableau(worked_examples()[0].initial);
    EXPECT_EQ(simulate_delta_ii(t, 0, 0), -2);
    EXPECT_EQ(simulate_delta_ii(t, 1, 1), -1);
    EXPECT_EQ(simulate_delta_ii(to_tableau(worked_examples()[0].terminal), 1, 1), 0);
}
