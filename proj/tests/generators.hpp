// Seeded generators for property tests.
#pragma once

#include "hermitian/sampling.hpp"
#include "hermitian/surface.hpp"

#include <random>

namespace gen {

using namespace herm;

inline Elem element(const Field& f, std::mt19937_64& rng)
{
    return Elem(static_cast<std::uint16_t>(uniform_below(rng, static_cast<std::uint64_t>(f.order()))));
}

inline Elem subfield_element(const Field& f, std::mt19937_64& rng)
{
    const auto sub = f.subfield_elements();
    return sub[static_cast<std::size_t>(uniform_below(rng, sub.size()))];
}

/// Random nonzero Hermitian matrix. With `rank_bias` some rows are forced to
/// repeat, so low ranks show up often.
inline HermitianMatrix hermitian(const Field& f, std::mt19937_64& rng, bool rank_bias = true)
{
    while (true) {
        Mat4 a{};
        for (std::size_t i = 0; i < 4; ++i) {
            a[i][i] = subfield_element(f, rng);
            for (std::size_t j = i + 1; j < 4; ++j) {
                a[i][j] = element(f, rng);
                a[j][i] = f.conj(a[i][j]);
            }
        }
        if (rank_bias && uniform_below(rng, 2) == 0) {
            // A = B^T diag(c) B^(q) with B of reduced size has rank at most its row count.
            const std::size_t r = 1 + static_cast<std::size_t>(uniform_below(rng, 3));
            Matrix b(r, Row(4));
            for (auto& row : b)
                for (auto& x : row) x = element(f, rng);
            Matrix d(r, Row(r, kZero));
            for (std::size_t i = 0; i < r; ++i) d[i][i] = subfield_element(f, rng);
            a = to_mat4(multiply(f, multiply(f, transpose(b), d), conjugate(f, b)));
        }
        bool nonzero = false;
        for (const auto& row : a)
            for (auto x : row) nonzero = nonzero || !x.is_zero();
        if (nonzero) return HermitianMatrix(f, a);
    }
}

} // namespace gen
