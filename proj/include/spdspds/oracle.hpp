#pragma once

#include <cstddef>
#include <vector>

#include "spdspds/lp_model.hpp"
#include "spdspds/tableau.hpp"

namespace spdspds {

/// Brute-force ground truth for small canonical LPs.
struct OracleVerdict {
    enum class Status { optimal, infeasible, unbounded };

    Status status = Status::infeasible;
    /// Optimal c.x and a maximizing vertex (optimal only).
    double value = 0.0;
    std::vector<double> x;
    /// Distinct feasible vertices, x part only.
    std::vector<std::vector<double>> vertices;
};

const char* to_string(OracleVerdict::Status s) noexcept;

/// Largest m + n accepted by oracle_solve.
inline constexpr std::size_t kOracleLimit = 24;

/// Enumerates every basis of [A | I]. Throws TooLargeError when m + n > kOracleLimit.
OracleVerdict oracle_solve(const CanonicalLP& lp);

/// infeasibility_index(pivot(t, I, J)) - infeasibility_index(t) by actually pivoting.
int simulate_delta_ii(const Tableau& t, std::size_t I, std::size_t J);

}  // namespace spdspds
