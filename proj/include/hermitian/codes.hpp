/**
 * @file codes.hpp
 * @brief Evaluation codes of degree-d forms on the rational points of V2.
 *
 * Row i of the generator matrix evaluates monomials(d)[i] at the surface
 * points in ascending id order, so the codeword of F has weight
 * n - |V(F) cap V2 (F_{q^2})|.
 */
#pragma once

#include "hermitian/bounds.hpp"
#include "hermitian/form.hpp"
#include "hermitian/linalg.hpp"
#include "hermitian/search.hpp"
#include "hermitian/surface.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace herm {

struct EvaluationCode {
    int q = 0;
    int d = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix generator;  ///< M_d x n
    Matrix basis;      ///< k x n, reduced row echelon
};

inline EvaluationCode build_code(const Surface& s, int d)
{
    if (d < 1) throw bound_error("code degree must be at least 1");
    const Field& f = s.field();
    EvaluationCode c;
    c.q = s.q();
    c.d = d;
    c.n = s.points().size();
    for (const auto& e : monomials(d)) {
        Row row;
        row.reserve(c.n);
        for (auto id : s.points()) {
            const Vec4 p = s.space().point(id);
            Elem x = kOne;
            for (std::size_t i = 0; i < 4; ++i) x = f.mul(x, f.pow(p[i], e[i]));
            row.push_back(x);
        }
        c.generator.push_back(std::move(row));
    }
    c.basis = c.generator;
    c.k = rref(f, c.basis);
    return c;
}

/// Codeword of F; coordinates follow the surface point order.
inline Row encode(const Surface& s, const Form& form)
{
    Row out;
    for (auto id : s.points()) out.push_back(evaluate(s.field(), form, s.space().point(id)));
    return out;
}

inline std::size_t weight(const Row& word)
{
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem x) { return !x.is_zero(); }));
}

struct WeightEnumeration {
    std::size_t min_distance = 0;
    std::uint64_t classes = 0;
    /// distribution[w] = number of nonzero codewords of weight w (all scalar multiples counted).
    std::vector<std::uint64_t> distribution;
};

/// Minimum weight over all nonzero codewords, one representative per scalar class.
inline WeightEnumeration min_distance_enumerate(const Field& f, const EvaluationCode& code, std::uint64_t budget = 10'000'000,
                                                std::size_t workers = 0)
{
    const auto s = static_cast<std::uint64_t>(f.order());
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < code.k; ++i) {
        if (size > budget / s) throw budget_error("codeword enumeration exceeds the budget of " + std::to_string(budget));
        size *= s;
    }
    if (size > budget) throw budget_error("codeword enumeration exceeds the budget of " + std::to_string(budget));

    WeightEnumeration out;
    out.classes = scalar_class_count(s, code.k);
    const std::size_t n = code.n;
    const std::size_t nw = worker_count(workers);
    constexpr std::uint64_t kBlock = 1 << 12;
    std::atomic<std::uint64_t> next{0};
    std::vector<std::vector<std::uint64_t>> dist(nw, std::vector<std::uint64_t>(n + 1, 0));

    auto run = [&](std::size_t w) {
        Row word(n);
        while (true) {
            const std::uint64_t begin = next.fetch_add(kBlock);
            if (begin >= out.classes) break;
            const std::uint64_t end = std::min(out.classes, begin + kBlock);
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                const auto msg = decode_scalar_class(idx, s, code.k);
                std::fill(word.begin(), word.end(), kZero);
                for (std::size_t r = 0; r < code.k; ++r) {
                    if (msg[r].is_zero()) continue;
                    for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(msg[r], code.basis[r][j]));
                }
                ++dist[w][weight(word)];
            }
        }
    };
    if (nw == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < nw; ++w) pool.emplace_back(run, w);
    }

    out.distribution.assign(n + 1, 0);
    for (const auto& d : dist)
        for (std::size_t w = 0; w <= n; ++w) out.distribution[w] += d[w] * (s - 1);
    out.min_distance = n;
    for (std::size_t w = 1; w <= n; ++w)
        if (out.distribution[w] != 0) {
            out.min_distance = w;
            break;
        }
    if (out.distribution[0] != 0) throw consistency_error("nonzero message encoded to the zero word");
    return out;
}

/// n minus the maximal intersection size; for d = q+1 this presumes Hermitian multiples are excluded.
inline std::size_t min_distance_geometric(int q, int d)
{
    if (d < 1 || d > q + 1) throw bound_error("geometric minimum distance is known for 1 <= d <= q+1, got d = " + std::to_string(d));
    const std::int64_t qq = q;
    const std::int64_t n = (qq * qq * qq + 1) * (qq * qq + 1);
    return static_cast<std::size_t>(n - bounds::sorensen(qq, d));
}

} // namespace herm
