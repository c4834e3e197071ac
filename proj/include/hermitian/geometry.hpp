/**
 * @file geometry.hpp
 * @brief Points, lines and planes of PG(3, q^2).
 *
 * Points and planes are normalized 4-tuples (first nonzero coordinate 1).
 * Their integer ids follow lexicographic order of the tuple by element
 * index, so (0:0:0:1) has id 0 and the (1:*:*:*) block comes last.
 * A line is keyed by its two lexicographically smallest points, which are
 * exactly the two rows of its reduced row echelon basis.
 */
#pragma once

#include "hermitian/field.hpp"
#include "hermitian/linalg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace herm {

class geometry_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Vec4 = std::array<Elem, 4>;
using PointId = std::uint32_t;

struct Plane {
    Vec4 coeffs{};
    friend bool operator==(const Plane&, const Plane&) = default;
};

struct Line {
    Vec4 first{};   ///< smallest point
    Vec4 second{};  ///< second smallest point
    std::vector<PointId> points;  ///< all q^2+1 points, ascending

    friend bool operator==(const Line& a, const Line& b) { return a.first == b.first && a.second == b.second; }
};

/// Normalized points of PG(n, s) in lexicographic order, n+1 = N coordinates.
template <std::size_t N>
std::vector<std::array<Elem, N>> projective_points(const Field& f)
{
    const int s = f.order();
    std::vector<std::array<Elem, N>> out;
    for (std::size_t lead = N; lead-- > 0;) {
        const std::size_t free = N - 1 - lead;
        std::size_t count = 1;
        for (std::size_t i = 0; i < free; ++i) count *= static_cast<std::size_t>(s);
        for (std::size_t c = 0; c < count; ++c) {
            std::array<Elem, N> v{};
            v[lead] = kOne;
            std::size_t x = c;
            for (std::size_t i = N; i-- > lead + 1;) {
                v[i] = Elem(static_cast<std::uint16_t>(x % static_cast<std::size_t>(s)));
                x /= static_cast<std::size_t>(s);
            }
            out.push_back(v);
        }
    }
    return out;
}

class Space {
public:
    explicit Space(FieldPtr field) : field_(std::move(field)), s_(static_cast<std::uint64_t>(field_->order())) {}

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    int q() const { return field_->q(); }

    std::uint64_t point_count() const { return 1 + s_ + s_ * s_ + s_ * s_ * s_; }

    Vec4 normalize(const Vec4& raw) const
    {
        std::size_t lead = 0;
        while (lead < 4 && raw[lead].is_zero()) ++lead;
        if (lead == 4) throw geometry_error("the zero vector is not a projective point");
        if (raw[lead] == kOne) return raw;
        const Elem scale = field_->inv(raw[lead]);
        Vec4 out;
        for (std::size_t i = 0; i < 4; ++i) out[i] = field_->mul(raw[i], scale);
        return out;
    }

    /// Id of a normalized tuple.
    PointId id(const Vec4& p) const
    {
        std::size_t lead = 0;
        while (lead < 4 && p[lead].is_zero()) ++lead;
        if (lead == 4) throw geometry_error("the zero vector is not a projective point");
        std::uint64_t offset = 0;
        std::uint64_t block = 1;
        for (std::size_t l = 3; l > lead; --l) {
            offset += block;
            block *= s_;
        }
        std::uint64_t digits = 0;
        for (std::size_t i = lead + 1; i < 4; ++i) digits = digits * s_ + p[i].index;
        return static_cast<PointId>(offset + digits);
    }

    Vec4 point(PointId id) const
    {
        std::uint64_t x = id;
        std::uint64_t block = 1;
        std::size_t lead = 3;
        while (x >= block) {
            x -= block;
            block *= s_;
            --lead;
        }
        Vec4 v{};
        v[lead] = kOne;
        for (std::size_t i = 4; i-- > lead + 1;) {
            v[i] = Elem(static_cast<std::uint16_t>(x % s_));
            x /= s_;
        }
        return v;
    }

    std::vector<Vec4> points() const { return projective_points<4>(*field_); }

    Elem dot(const Vec4& a, const Vec4& b) const
    {
        Elem acc = kZero;
        for (std::size_t i = 0; i < 4; ++i) acc = field_->add(acc, field_->mul(a[i], b[i]));
        return acc;
    }

    bool incident(const Plane& plane, const Vec4& point) const { return dot(plane.coeffs, point).is_zero(); }

    PointId plane_id(const Plane& plane) const { return id(plane.coeffs); }
    Plane plane(PointId id) const { return Plane{point(id)}; }

    /// Normalized points of the projective subspace spanned by the rows of basis, ascending by id.
    std::vector<Vec4> span_points(const std::vector<Vec4>& basis) const
    {
        std::vector<Vec4> out;
        auto combine = [&](const auto& coeffs) {
            Vec4 v{};
            for (std::size_t j = 0; j < basis.size(); ++j)
                for (std::size_t i = 0; i < 4; ++i) v[i] = field_->add(v[i], field_->mul(coeffs[j], basis[j][i]));
            out.push_back(normalize(v));
        };
        switch (basis.size()) {
        case 1: out.push_back(normalize(basis[0])); break;
        case 2: for (const auto& c : projective_points<2>(*field_)) combine(c); break;
        case 3: for (const auto& c : projective_points<3>(*field_)) combine(c); break;
        case 4: for (const auto& c : projective_points<4>(*field_)) combine(c); break;
        default: throw geometry_error("span_points expects 1 to 4 basis vectors");
        }
        std::sort(out.begin(), out.end(), [&](const Vec4& a, const Vec4& b) { return id(a) < id(b); });
        return out;
    }

    Line line_through(const Vec4& p, const Vec4& q) const
    {
        Matrix m{Row(p.begin(), p.end()), Row(q.begin(), q.end())};
        if (rref(*field_, m) < 2) throw geometry_error("line_through needs two distinct points");
        return line_from_rref(to_vec(m[0]), to_vec(m[1]));
    }

    /// Every line of PG(3, q^2), enumerated through reduced row echelon 2x4 bases.
    std::vector<Line> lines() const
    {
        std::vector<Line> out;
        const auto s = static_cast<std::size_t>(s_);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                std::vector<std::size_t> free1;
                for (std::size_t c = i + 1; c < 4; ++c)
                    if (c != j) free1.push_back(c);
                std::vector<std::size_t> free2;
                for (std::size_t c = j + 1; c < 4; ++c) free2.push_back(c);
                const std::size_t nfree = free1.size() + free2.size();
                std::size_t count = 1;
                for (std::size_t t = 0; t < nfree; ++t) count *= s;
                for (std::size_t c = 0; c < count; ++c) {
                    Vec4 r1{};
                    Vec4 r2{};
                    r1[i] = kOne;
                    r2[j] = kOne;
                    std::size_t x = c;
                    for (auto col : free1) {
                        r1[col] = Elem(static_cast<std::uint16_t>(x % s));
                        x /= s;
                    }
                    for (auto col : free2) {
                        r2[col] = Elem(static_cast<std::uint16_t>(x % s));
                        x /= s;
                    }
                    out.push_back(line_from_rref(r1, r2));
                }
            }
        std::sort(out.begin(), out.end(), [&](const Line& a, const Line& b) { return key(a) < key(b); });
        return out;
    }

    std::uint64_t key(const Line& l) const { return static_cast<std::uint64_t>(id(l.first)) * point_count() + id(l.second); }

    Plane plane_through(const Vec4& p, const Vec4& q, const Vec4& r) const
    {
        Matrix m{Row(p.begin(), p.end()), Row(q.begin(), q.end()), Row(r.begin(), r.end())};
        auto ns = nullspace(*field_, m, 4);
        if (ns.size() != 1) throw geometry_error("plane_through needs three non-collinear points");
        return Plane{normalize(to_vec(ns[0]))};
    }

    std::vector<Plane> planes() const
    {
        std::vector<Plane> out;
        for (const auto& c : points()) out.push_back(Plane{c});
        return out;
    }

    std::vector<Vec4> plane_points(const Plane& plane) const
    {
        Matrix m{Row(plane.coeffs.begin(), plane.coeffs.end())};
        return span_points(to_vecs(nullspace(*field_, m, 4)));
    }

    std::vector<Plane> planes_through_point(const Vec4& p) const
    {
        Matrix m{Row(p.begin(), p.end())};
        std::vector<Plane> out;
        for (const auto& c : span_points(to_vecs(nullspace(*field_, m, 4)))) out.push_back(Plane{c});
        return out;
    }

    std::vector<Line> lines_in_plane(const Plane& plane) const
    {
        Matrix m{Row(plane.coeffs.begin(), plane.coeffs.end())};
        const auto basis = to_vecs(nullspace(*field_, m, 4));
        std::vector<Line> out;
        for (const auto& a : projective_points<3>(*field_)) {
            Matrix dual{Row(a.begin(), a.end())};
            const auto uv = nullspace(*field_, dual, 3);
            std::array<Vec4, 2> ends{};
            for (std::size_t t = 0; t < 2; ++t)
                for (std::size_t j = 0; j < 3; ++j)
                    for (std::size_t i = 0; i < 4; ++i)
                        ends[t][i] = field_->add(ends[t][i], field_->mul(uv[t][j], basis[j][i]));
            out.push_back(line_through(ends[0], ends[1]));
        }
        std::sort(out.begin(), out.end(), [&](const Line& x, const Line& y) { return key(x) < key(y); });
        return out;
    }

    /// The q^2+1 planes containing the line, ascending by id.
    std::vector<Plane> book(const Line& l) const
    {
        Matrix m{Row(l.first.begin(), l.first.end()), Row(l.second.begin(), l.second.end())};
        std::vector<Plane> out;
        for (const auto& c : span_points(to_vecs(nullspace(*field_, m, 4)))) out.push_back(Plane{c});
        return out;
    }

    bool line_in_plane(const Line& l, const Plane& plane) const
    {
        return incident(plane, l.first) && incident(plane, l.second);
    }

    bool on_line(const Line& l, PointId p) const { return std::binary_search(l.points.begin(), l.points.end(), p); }

    /// Line of intersection of two distinct planes.
    Line meet(const Plane& a, const Plane& b) const
    {
        Matrix m{Row(a.coeffs.begin(), a.coeffs.end()), Row(b.coeffs.begin(), b.coeffs.end())};
        const auto ns = nullspace(*field_, m, 4);
        if (ns.size() != 2) throw geometry_error("meet needs two distinct planes");
        return line_through(to_vec(ns[0]), to_vec(ns[1]));
    }

private:
    static Vec4 to_vec(const Row& r) { return {r[0], r[1], r[2], r[3]}; }
    static std::vector<Vec4> to_vecs(const Matrix& m)
    {
        std::vector<Vec4> out;
        for (const auto& r : m) out.push_back(to_vec(r));
        return out;
    }

    // r1, r2: rref rows with pivots i < j. The smallest point is r2, the next is r1.
    Line line_from_rref(const Vec4& r1, const Vec4& r2) const
    {
        Line l{r2, r1, {}};
        l.points.reserve(static_cast<std::size_t>(s_ + 1));
        l.points.push_back(id(r2));
        for (std::uint64_t c = 0; c < s_; ++c) {
            const Elem t(static_cast<std::uint16_t>(c));
            Vec4 v;
            for (std::size_t i = 0; i < 4; ++i) v[i] = field_->add(r1[i], field_->mul(t, r2[i]));
            l.points.push_back(id(v));
        }
        std::sort(l.points.begin(), l.points.end());
        return l;
    }

    FieldPtr field_;
    std::uint64_t s_;
};

} // namespace herm
