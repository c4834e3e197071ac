// Reproducible random forms: uniform coefficient vectors and products of
// linear forms biased toward tangent-plane pencils.
#pragma once

#include "hermitian/form.hpp"
#include "hermitian/surface.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace herm {

/// Uniform integer in [0, n) by rejection; the engine output is fully specified, so draws are portable.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n)
{
    const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % n);
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % n;
}

enum class SampleKind { uniform, linear_product, tangent_product, pencil, plane_times_uniform };

class FormSampler {
public:
    FormSampler(const Surface& s, int d, std::uint64_t seed) : s_(s), d_(d), rng_(seed)
    {
        for (auto id : s.points()) tangent_.push_back(s.tangent_plane(s.space().point(id)));
    }

    Form uniform(int degree)
    {
        const std::size_t m = monomial_count(degree);
        std::vector<Elem> c(m);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& x : c) {
                x = random_elem();
                nonzero = nonzero || !x.is_zero();
            }
        }
        return Form::from_dense(degree, c);
    }

    Form draw(SampleKind kind)
    {
        const Field& f = s_.field();
        Form out = Form::constant(kOne);
        switch (kind) {
        case SampleKind::uniform: return uniform(d_);
        case SampleKind::linear_product:
            for (int i = 0; i < d_; ++i) out = multiply(f, out, uniform(1));
            return out;
        case SampleKind::tangent_product:
            for (int i = 0; i < d_; ++i) out = multiply(f, out, Form::linear(random_tangent().coeffs));
            return out;
        case SampleKind::pencil: {
            const auto pts = s_.space().point_count();
            const auto a = static_cast<PointId>(uniform_below(rng_, pts));
            auto b = static_cast<PointId>(uniform_below(rng_, pts - 1));
            if (b >= a) ++b;
            const Line axis = s_.space().line_through(s_.space().point(a), s_.space().point(b));
            std::vector<Plane> tangent;
            std::vector<Plane> other;
            for (const auto& p : s_.space().book(axis)) (s_.is_tangent_plane(p) ? tangent : other).push_back(p);
            for (int i = 0; i < d_; ++i) {
                auto& pool = !tangent.empty() ? tangent : other;
                const auto k = static_cast<std::size_t>(uniform_below(rng_, pool.size()));
                out = multiply(f, out, Form::linear(pool[k].coeffs));
                pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
            }
            return out;
        }
        case SampleKind::plane_times_uniform:
            out = Form::linear(random_tangent().coeffs);
            if (d_ > 1) out = multiply(f, out, uniform(d_ - 1));
            return out;
        }
        return out;
    }

    Form structured()
    {
        static constexpr SampleKind kinds[] = {SampleKind::linear_product, SampleKind::tangent_product, SampleKind::pencil,
                                               SampleKind::plane_times_uniform};
        return draw(kinds[uniform_below(rng_, 4)]);
    }

    /// Half uniform, half structured.
    Form mixed() { return uniform_below(rng_, 2) == 0 ? uniform(d_) : structured(); }

    std::mt19937_64& rng() { return rng_; }

private:
    Elem random_elem() { return Elem(static_cast<std::uint16_t>(uniform_below(rng_, static_cast<std::uint64_t>(s_.field().order())))); }
    const Plane& random_tangent() { return tangent_[static_cast<std::size_t>(uniform_below(rng_, tangent_.size()))]; }

    const Surface& s_;
    int d_;
    std::mt19937_64 rng_;
    std::vector<Plane> tangent_;
};

} // namespace herm
