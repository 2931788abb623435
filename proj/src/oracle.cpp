#include "spdspds/oracle.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "spdspds/error.hpp"

namespace spdspds {

namespace {

constexpr double kSingular = 1e-10;
constexpr double kFeasible = 1e-9;

// Solves B.x = rhs in place with partial pivoting; false when singular.
bool gauss_solve(std::vector<double> B, std::size_t k, std::vector<double>& rhs,
                 std::size_t rhs_cols) {
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < k; ++r) {
            if (std::fabs(B[r * k + c]) > std::fabs(B[piv * k + c])) {
                piv = r;
            }
        }
        if (std::fabs(B[piv * k + c]) <= kSingular) {
            return false;
        }
        if (piv != c) {
            for (std::size_t j = 0; j < k; ++j) std::swap(B[c * k + j], B[piv * k + j]);
            for (std::size_t j = 0; j < rhs_cols; ++j) std::swap(rhs[c * rhs_cols + j], rhs[piv * rhs_cols + j]);
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c) continue;
            const double f = B[r * k + c] / B[c * k + c];
            if (f == 0.0) continue;
            for (std::size_t j = c; j < k; ++j) B[r * k + j] -= f * B[c * k + j];
            for (std::size_t j = 0; j < rhs_cols; ++j) rhs[r * rhs_cols + j] -= f * rhs[c * rhs_cols + j];
        }
    }
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j < rhs_cols; ++j) rhs[r * rhs_cols + j] /= B[r * k + r];
    }
    return true;
}

}  // namespace

const char* to_string(OracleVerdict::Status s) noexcept {
    switch (s) {
        case OracleVerdict::Status::optimal: return "optimal";
        case OracleVerdict::Status::infeasible: return "infeasible";
        case OracleVerdict::Status::unbounded: return "unbounded";
    }
    return "?";
}

OracleVerdict oracle_solve(const CanonicalLP& lp) {
    const std::size_t m = lp.m();
    const std::size_t n = lp.n();
    if (m + n > kOracleLimit) {
        throw TooLargeError("oracle limited to m + n <= " + std::to_string(kOracleLimit) + ", got " +
                            std::to_string(m + n));
    }
    const std::size_t total = n + m;
    // Column k of [A | I].
    auto entry = [&](std::size_t i, std::size_t k) {
        return k < n ? lp.a(i, k) : (k - n == i ? 1.0 : 0.0);
    };
    auto cost = [&](std::size_t k) { return k < n ? lp.c[k] : 0.0; };

    OracleVerdict out;
    std::set<std::vector<long long>> seen;
    bool found = false;
    bool unbounded = false;

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = i;
    std::vector<bool> in_basis(total);

    while (true) {
        std::vector<double> B(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t r = 0; r < m; ++r) B[i * m + r] = entry(i, basis[r]);
        // Right-hand sides: b, then every column of [A | I] for the ray test.
        const std::size_t cols = 1 + total;
        std::vector<double> rhs(m * cols);
        for (std::size_t i = 0; i < m; ++i) {
            rhs[i * cols] = lp.b[i];
            for (std::size_t k = 0; k < total; ++k) rhs[i * cols + 1 + k] = entry(i, k);
        }
        if (m == 0 || gauss_solve(B, m, rhs, cols)) {
            bool feasible = true;
            for (std::size_t i = 0; i < m && feasible; ++i) feasible = rhs[i * cols] >= -kFeasible;
            if (feasible) {
                std::vector<double> x(n, 0.0);
                double value = 0.0;
                std::fill(in_basis.begin(), in_basis.end(), false);
                for (std::size_t r = 0; r < m; ++r) {
                    in_basis[basis[r]] = true;
                    if (basis[r] < n) x[basis[r]] = std::max(0.0, rhs[r * cols]);
                }
                for (std::size_t j = 0; j < n; ++j) value += lp.c[j] * x[j];

                std::vector<long long> key(n);
                for (std::size_t j = 0; j < n; ++j) key[j] = std::llround(x[j] / kFeasible);
                if (seen.insert(key).second) out.vertices.push_back(x);

                if (!found || value > out.value) {
                    out.value = value;
                    out.x = x;
                }
                found = true;

                for (std::size_t k = 0; k < total && !unbounded; ++k) {
                    if (in_basis[k]) continue;
                    double gain = cost(k);
                    bool ray = true;
                    for (std::size_t r = 0; r < m; ++r) {
                        const double w = rhs[r * cols + 1 + k];
                        gain -= cost(basis[r]) * w;
                        ray = ray && w <= kFeasible;
                    }
                    unbounded = ray && gain > kFeasible;
                }
            }
        }
        // Next combination in lexicographic order.
        std::size_t pos = m;
        while (pos > 0 && basis[pos - 1] == total - m + pos - 1) --pos;
        if (pos == 0) break;
        ++basis[pos - 1];
        for (std::size_t r = pos; r < m; ++r) basis[r] = basis[r - 1] + 1;
    }

    if (!found) {
        out.status = OracleVerdict::Status::infeasible;
        out.value = 0.0;
        out.x.clear();
    } else if (unbounded) {
        out.status = OracleVerdict::Status::unbounded;
        out.value = 0.0;
        out.x.clear();
    } else {
        out.status = OracleVerdict::Status::optimal;
    }
    return out;
}

int simulate_delta_ii(const Tableau& t, std::size_t I, std::size_t J) {
    return infeasibility_index(pivot(t, I, J)) - infeasibility_index(t);
}

}  // namespace spdspds
