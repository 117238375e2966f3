#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "flat.hpp"

namespace jumploci {

inline constexpr std::uint64_t kBruteForceLimit = 100'000'000;

struct BruteForceResult {
    std::uint64_t scanned = 0;
    std::vector<FlatConnection> solutions;
};

namespace detail {

/// Maurer-Cartan equations over F_p as explicit polynomials in the flattened
/// coefficients (index k * dim g + s).
struct CompiledMc {
    struct Linear {
        std::size_t var;
        std::int64_t coef;
    };
    struct Quadratic {
        std::size_t u, v;
        std::int64_t coef;
    };
    struct Equation {
        std::vector<Linear> linear;
        std::vector<Quadratic> quadratic;
    };

    std::int64_t p = 0;
    std::vector<Equation> equations;

    bool satisfied(const std::vector<std::int64_t>& x) const {
        for (const auto& eq : equations) {
            std::int64_t acc = 0;
            for (const auto& t : eq.linear) acc += t.coef * x[t.var];
            for (const auto& t : eq.quadratic) acc += (t.coef * x[t.u] % p) * x[t.v];
            if (acc % p != 0) return false;
        }
        return true;
    }
};

inline CompiledMc compile_mc(const Cdga& A, const LieAlgebra& g) {
    CompiledMc mc;
    mc.p = A.field.prime();
    const std::size_t n1 = A.dim(1), n2 = A.dim(2), m = g.dim();
    mc.equations.resize(n2 * m);
    for (std::size_t c = 0; c < n2; ++c) {
        for (std::size_t z = 0; z < m; ++z) {
            auto& eq = mc.equations[c * m + z];
            for (std::size_t k = 0; k < n1; ++k) {
                const auto& dk = A.differential[1](c, k);
                if (!dk.is_zero()) eq.linear.push_back({k * m + z, dk.residue()});
            }
            for (std::size_t k = 0; k < n1; ++k) {
                for (std::size_t l = k + 1; l < n1; ++l) {
                    const Vector prod = A.product_of_basis(1, k, 1, l);
                    if (prod[c].is_zero()) continue;
                    for (std::size_t s = 0; s < m; ++s) {
                        for (std::size_t t = 0; t < m; ++t) {
                            const Scalar coef = prod[c] * g.structure(s, t, z);
                            if (!coef.is_zero()) eq.quadratic.push_back({k * m + s, l * m + t, coef.residue()});
                        }
                    }
                }
            }
        }
    }
    return mc;
}

}  // namespace detail

/// Every flat connection over F_p, in lexicographic order of the row-major
/// coefficient vector. `jobs` workers scan disjoint contiguous index ranges.
inline BruteForceResult brute_force_flat(const Cdga& A, const LieAlgebra& g, unsigned jobs = 1) {
    if (A.field.is_rational() || A.field != g.field) {
        throw InputError("brute_force_flat needs an algebra and Lie algebra over the same F_p");
    }
    const std::uint64_t p = A.field.prime();
    const std::size_t nvars = A.dim(1) * g.dim();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < nvars; ++i) {
        if (total > kBruteForceLimit / p) {
            throw PreconditionError("brute force search space " + std::to_string(p) + "^" + std::to_string(nvars) +
                                    " exceeds the bound " + std::to_string(kBruteForceLimit));
        }
        total *= p;
    }
    const auto mc = detail::compile_mc(A, g);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));

    auto scan = [&](std::uint64_t begin, std::uint64_t end, std::vector<std::vector<std::int64_t>>& found) {
        std::vector<std::int64_t> x(nvars, 0);
        std::uint64_t idx = begin;
        for (std::size_t i = nvars; i-- > 0;) {
            x[i] = static_cast<std::int64_t>(idx % p);
            idx /= p;
        }
        for (std::uint64_t n = begin; n < end; ++n) {
            if (mc.satisfied(x)) found.push_back(x);
            for (std::size_t i = nvars; i-- > 0;) {
                if (++x[i] < static_cast<std::int64_t>(p)) break;
                x[i] = 0;
            }
        }
    };

    std::vector<std::vector<std::vector<std::int64_t>>> found(jobs);
    if (jobs == 1) {
        scan(0, total, found[0]);
    } else {
        std::vector<std::thread> workers;
        const std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
            const std::uint64_t begin = std::min(total, j * chunk);
            const std::uint64_t end = std::min(total, begin + chunk);
            workers.emplace_back(scan, begin, end, std::ref(found[j]));
        }
        for (auto& w : workers) w.join();
    }

    BruteForceResult result;
    result.scanned = total;
    const std::size_t m = g.dim();
    for (const auto& part : found) {
        for (const auto& x : part) {
            FlatConnection w = FlatConnection::zero(A, g);
            for (std::size_t v = 0; v < nvars; ++v) w.coeffs(v / m, v % m) = Scalar(A.field, static_cast<long>(x[v]));
            result.solutions.push_back(std::move(w));
        }
    }
    return result;
}

}  // namespace jumploci
