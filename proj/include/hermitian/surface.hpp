/**
 * @file surface.hpp
 * @brief Hermitian matrices and surfaces in PG(3, q^2).
 *
 * A Hermitian matrix A satisfies A^T = A^(q) and defines the sesquilinear form
 * h(x, y) = x^T A y^(q). Its surface is {x : h(x, x) = 0}; the tangent plane at
 * a surface point P has dual coordinates A P^(q).
 */
#pragma once

#include "hermitian/field.hpp"
#include "hermitian/geometry.hpp"
#include "hermitian/linalg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace herm {

using Mat4 = std::array<Vec4, 4>;

inline Mat4 identity4()
{
    Mat4 m{};
    for (std::size_t i = 0; i < 4; ++i) m[i][i] = kOne;
    return m;
}

inline Matrix to_matrix(const Mat4& a)
{
    Matrix m;
    for (const auto& r : a) m.emplace_back(r.begin(), r.end());
    return m;
}

inline Mat4 to_mat4(const Matrix& m)
{
    Mat4 a{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) a[i][j] = m[i][j];
    return a;
}

class HermitianMatrix {
public:
    HermitianMatrix(const Field& f, const Mat4& a) : a_(a)
    {
        bool nonzero = false;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                nonzero = nonzero || !a[i][j].is_zero();
                if (a[j][i] != f.conj(a[i][j])) throw field_error("matrix is not Hermitian: A^T != A^(q)");
            }
        if (!nonzero) throw field_error("the zero matrix is not Hermitian");
    }

    static HermitianMatrix identity(const Field& f) { return {f, identity4()}; }

    const Mat4& entries() const { return a_; }
    Elem operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }

private:
    Mat4 a_;
};

/// h(x, y) = x^T A y^(q).
inline Elem hermitian_product(const Field& f, const Mat4& a, const Vec4& x, const Vec4& y)
{
    Elem acc = kZero;
    for (std::size_t i = 0; i < 4; ++i) {
        if (x[i].is_zero()) continue;
        Elem row = kZero;
        for (std::size_t j = 0; j < 4; ++j) row = f.add(row, f.mul(a[i][j], f.conj(y[j])));
        acc = f.add(acc, f.mul(x[i], row));
    }
    return acc;
}

/// T^T A T^(q).
inline Mat4 congruence(const Field& f, const Mat4& t, const Mat4& a)
{
    const Matrix tt = to_matrix(t);
    return to_mat4(multiply(f, multiply(f, transpose(tt), to_matrix(a)), conjugate(f, tt)));
}

struct Canonicalization {
    Mat4 transform{};  ///< columns t_i with h(t_i, t_j) = [i == j < rank]
    int rank = 0;
};

/**
 * Sesquilinear Gram-Schmidt. Repeatedly pick a vector of nonzero Hermitian
 * norm (from the remaining basis, or b_i + mu b_j when every diagonal value
 * vanishes), scale it to norm 1 with a norm-map preimage, and project it out
 * of the remaining basis. What is left when the form vanishes is the radical.
 */
inline Canonicalization canonicalize(const Field& f, const HermitianMatrix& hm)
{
    const Mat4& a = hm.entries();
    std::vector<Vec4> remaining;
    for (std::size_t i = 0; i < 4; ++i) {
        Vec4 e{};
        e[i] = kOne;
        remaining.push_back(e);
    }
    auto h = [&](const Vec4& x, const Vec4& y) { return hermitian_product(f, a, x, y); };
    auto axpy = [&](const Vec4& x, Elem mu, const Vec4& y) {
        Vec4 out;
        for (std::size_t i = 0; i < 4; ++i) out[i] = f.add(x[i], f.mul(mu, y[i]));
        return out;
    };

    // Norm preimages: norm_root[c] is some lambda with lambda^(q+1) = c.
    std::unordered_map<std::uint16_t, Elem> norm_root;
    for (int i = 1; i < f.order(); ++i) {
        const Elem x(static_cast<std::uint16_t>(i));
        norm_root.emplace(f.norm(x).index, x);
    }

    std::vector<Vec4> orthonormal;
    while (!remaining.empty()) {
        std::size_t pick = remaining.size();
        Vec4 v{};
        for (std::size_t i = 0; i < remaining.size() && pick == remaining.size(); ++i)
            if (!h(remaining[i], remaining[i]).is_zero()) {
                pick = i;
                v = remaining[i];
            }
        for (std::size_t i = 0; i < remaining.size() && pick == remaining.size(); ++i)
            for (std::size_t j = 0; j < remaining.size() && pick == remaining.size(); ++j) {
                if (i == j || h(remaining[i], remaining[j]).is_zero()) continue;
                // h(b_i + mu b_j, same) = Tr(conj(mu) h(b_i, b_j)); the trace is onto GF(q).
                for (int m = 1; m < f.order(); ++m) {
                    const Vec4 cand = axpy(remaining[i], Elem(static_cast<std::uint16_t>(m)), remaining[j]);
                    if (!h(cand, cand).is_zero()) {
                        pick = i;
                        v = cand;
                        break;
                    }
                }
                if (pick == remaining.size()) throw consistency_error("hyperbolic pair without a non-isotropic combination");
            }
        if (pick == remaining.size()) break;

        const Elem c = h(v, v);
        if (!f.in_subfield(c)) throw consistency_error("Hermitian norm outside GF(q)");
        const Elem lambda = norm_root.at(f.inv(c).index);
        for (auto& x : v) x = f.mul(lambda, x);

        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
        for (auto& b : remaining) b = axpy(b, f.neg(h(b, v)), v);
        orthonormal.push_back(v);
    }

    Canonicalization out;
    out.rank = static_cast<int>(orthonormal.size());
    std::vector<Vec4> cols = orthonormal;
    cols.insert(cols.end(), remaining.begin(), remaining.end());
    for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t r = 0; r < 4; ++r) out.transform[r][c] = cols[c][r];
    return out;
}

enum class LineKind { tangent, secant, generator };

inline const char* to_string(LineKind k)
{
    switch (k) {
    case LineKind::tangent: return "tangent";
    case LineKind::secant: return "secant";
    case LineKind::generator: return "generator";
    }
    return "?";
}

struct LineClass {
    LineKind kind{};
    std::vector<PointId> points;  ///< rational points of the line on the surface
};

struct BookClass {
    std::vector<Plane> planes;
    int tangent_planes = 0;
    std::vector<PointId> tangency_points;  ///< one per tangent plane, in book order
    int tangent_at_line_points = 0;        ///< tangent planes whose tangency point lies on the line
};

struct TangentPlaneCensus {
    int generators = 0;           ///< generators through P
    int tangents_through_point = 0;
    int secants_through_point = 0;  ///< must be 0
    int secants = 0;              ///< lines of the plane not through P that are secant
    int tangents_off_point = 0;   ///< must be 0
    int generators_off_point = 0; ///< must be 0
    int total_lines = 0;
};

class degenerate_surface_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Surface {
public:
    /// The surface x_0^{q+1} + x_1^{q+1} + x_2^{q+1} + x_3^{q+1} = 0.
    static Surface canonical(FieldPtr f)
    {
        const Field& fr = *f;
        return Surface(Space(std::move(f)), HermitianMatrix::identity(fr));
    }

    Surface(Space space, HermitianMatrix matrix) : space_(std::move(space)), matrix_(std::move(matrix))
    {
        const Field& f = space_.field();
        rank_ = static_cast<int>(herm::rank(f, to_matrix(matrix_.entries())));
        if (space_.point_count() > (1ULL << 24)) throw field_error("surface enumeration limited to PG(3, q^2) with at most 2^24 points");
        index_.assign(static_cast<std::size_t>(space_.point_count()), -1);
        canonical_ = matrix_.entries() == identity4();
        const auto all = space_.points();
        for (PointId id = 0; id < all.size(); ++id)
            if (contains(all[id])) {
                index_[id] = static_cast<std::int32_t>(points_.size());
                points_.push_back(id);
            }
        if (rank_ == 4) {
            inverse_ = to_mat4(*herm::inverse(f, to_matrix(matrix_.entries())));
            build_generators();
        }
    }

    const Space& space() const { return space_; }
    const Field& field() const { return space_.field(); }
    int q() const { return space_.q(); }
    const HermitianMatrix& matrix() const { return matrix_; }
    int rank() const { return rank_; }
    bool non_degenerate() const { return rank_ == 4; }
    bool is_canonical() const { return canonical_; }

    Elem value(const Vec4& p) const
    {
        if (canonical_) {
            const Field& f = field();
            Elem acc = kZero;
            for (auto x : p) acc = f.add(acc, f.norm(x));
            return acc;
        }
        return hermitian_product(field(), matrix_.entries(), p, p);
    }
    bool contains(const Vec4& p) const { return value(p).is_zero(); }
    bool contains(PointId id) const { return index_[id] >= 0; }

    /// Surface points as ids, ascending.
    const std::vector<PointId>& points() const { return points_; }
    /// Position of a point in points(), or -1.
    std::int32_t point_index(PointId id) const { return index_[id]; }

    Plane tangent_plane(const Vec4& p) const
    {
        require_non_degenerate("tangent_plane");
        if (!contains(p)) throw geometry_error("tangent_plane: point is not on the surface");
        const Field& f = field();
        Vec4 c{};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) c[i] = f.add(c[i], f.mul(matrix_(i, j), f.conj(p[j])));
        return Plane{space_.normalize(c)};
    }

    /// Point P with A P^(q) proportional to the plane's coordinates.
    Vec4 pole(const Plane& plane) const
    {
        require_non_degenerate("pole");
        const Field& f = field();
        Vec4 p{};
        for (std::size_t i = 0; i < 4; ++i) {
            Elem acc = kZero;
            for (std::size_t j = 0; j < 4; ++j) acc = f.add(acc, f.mul(inverse_[i][j], plane.coeffs[j]));
            p[i] = f.conj(acc);
        }
        return space_.normalize(p);
    }

    bool is_tangent_plane(const Plane& plane) const { return contains(pole(plane)); }

    std::size_t section_size(const Plane& plane) const
    {
        std::size_t n = 0;
        for (const auto& p : space_.plane_points(plane)) n += contains(p) ? 1 : 0;
        return n;
    }

    LineClass classify_line(const Line& l) const
    {
        require_non_degenerate("classify_line");
        LineClass out;
        for (auto id : l.points)
            if (contains(id)) out.points.push_back(id);
        const auto n = out.points.size();
        const auto q = static_cast<std::size_t>(this->q());
        if (n == 1)
            out.kind = LineKind::tangent;
        else if (n == q + 1)
            out.kind = LineKind::secant;
        else if (n == q * q + 1)
            out.kind = LineKind::generator;
        else
            throw consistency_error("line meets the surface in " + std::to_string(n) + " points");
        return out;
    }

    const std::vector<Line>& generators() const
    {
        require_non_degenerate("generators");
        return generators_;
    }

    /// Generator indices through the surface point at position idx of points().
    const std::vector<std::uint32_t>& generators_through(std::size_t idx) const { return through_[idx]; }

    BookClass classify_book(const Line& l) const
    {
        require_non_degenerate("classify_book");
        BookClass out;
        out.planes = space_.book(l);
        for (const auto& plane : out.planes) {
            const Vec4 pole_point = pole(plane);
            if (!contains(pole_point)) continue;
            ++out.tangent_planes;
            const PointId id = space_.id(pole_point);
            out.tangency_points.push_back(id);
            if (space_.on_line(l, id)) ++out.tangent_at_line_points;
        }
        return out;
    }

    TangentPlaneCensus tangent_plane_census(const Vec4& p) const
    {
        const Plane plane = tangent_plane(p);
        const PointId pid = space_.id(p);
        TangentPlaneCensus c;
        for (const auto& l : space_.lines_in_plane(plane)) {
            ++c.total_lines;
            const LineKind kind = classify_line(l).kind;
            if (space_.on_line(l, pid)) {
                if (kind == LineKind::generator) ++c.generators;
                else if (kind == LineKind::tangent) ++c.tangents_through_point;
                else ++c.secants_through_point;
            } else {
                if (kind == LineKind::secant) ++c.secants;
                else if (kind == LineKind::tangent) ++c.tangents_off_point;
                else ++c.generators_off_point;
            }
        }
        return c;
    }

private:
    void require_non_degenerate(const char* what) const
    {
        if (rank_ != 4)
            throw degenerate_surface_error(std::string(what) + " requires a non-degenerate surface (rank " + std::to_string(rank_) + ")");
    }

    // Splits each tangent-plane section into the q+1 lines through the tangency point.
    void build_generators()
    {
        const auto q = static_cast<std::size_t>(this->q());
        std::unordered_map<std::uint64_t, Line> found;
        for (PointId pid : points_) {
            const Vec4 p = space_.point(pid);
            std::unordered_map<std::uint64_t, std::size_t> groups;
            for (const auto& x : space_.plane_points(tangent_plane(p))) {
                if (x == p || !contains(x)) continue;
                Line l = space_.line_through(p, x);
                const auto k = space_.key(l);
                ++groups[k];
                found.try_emplace(k, std::move(l));
            }
            if (groups.size() != q + 1) throw consistency_error("tangent section does not split into q+1 lines");
            for (const auto& [k, n] : groups)
                if (n != q * q) throw consistency_error("tangent section line with wrong point count");
        }
        for (auto& [k, l] : found) generators_.push_back(std::move(l));
        std::sort(generators_.begin(), generators_.end(),
                  [&](const Line& a, const Line& b) { return space_.key(a) < space_.key(b); });
        through_.assign(points_.size(), {});
        for (std::uint32_t g = 0; g < generators_.size(); ++g)
            for (auto id : generators_[g].points) {
                if (index_[id] < 0) throw consistency_error("generator point off the surface");
                through_[static_cast<std::size_t>(index_[id])].push_back(g);
            }
    }

    Space space_;
    HermitianMatrix matrix_;
    int rank_ = 0;
    bool canonical_ = false;
    Mat4 inverse_{};
    std::vector<PointId> points_;
    std::vector<std::int32_t> index_;
    std::vector<Line> generators_;
    std::vector<std::vector<std::uint32_t>> through_;
};

} // namespace herm
