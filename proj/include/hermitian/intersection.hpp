/**
 * @file intersection.hpp
 * @brief Incidence statistics of V(F) against a non-degenerate Hermitian surface.
 *
 * Notation follows the usual one for this problem: X is the intersection,
 * J_F the generators inside V(F), delta = d(q+1) - |J_F|, T(l) the J_F lines
 * meeting l, a(Pi, l) the members of T(l) inside a plane Pi of the book of l,
 * and r_P the number of J_F lines through P. The residual curve is replaced by
 * a computable surrogate: rational points of X lying on no J_F line.
 */
#pragma once

#include "hermitian/form.hpp"
#include "hermitian/geometry.hpp"
#include "hermitian/surface.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace herm {

/// Per-line data for a generator in J_F.
struct GeneratorStats {
    std::uint32_t generator = 0;        ///< index into Surface::generators()
    int t_size = 0;                     ///< |T(l)|
    std::vector<PointId> book;          ///< plane ids of the book of l, ascending
    std::vector<int> a;                 ///< a(Pi, l) aligned with book
    std::vector<bool> plane_in_vf;      ///< Pi contained in V(F), aligned with book
};

struct IntersectionReport {
    Form form;
    int q = 0;
    int d = 0;
    std::vector<PointId> points;               ///< X(F_{q^2}), ascending
    std::vector<std::uint32_t> jf;             ///< generator indices, ascending
    std::optional<long> delta;                 ///< absent when V2 is a component
    std::vector<PointId> surrogate_xprime;
    std::vector<GeneratorStats> lines;         ///< aligned with jf
    std::optional<int> min_t;                  ///< X; absent when J_F is empty
    std::vector<std::pair<PointId, int>> multiplicities;  ///< r_P for P on the union of J_F
    std::vector<PointId> contained_tangent_planes;        ///< plane ids
    bool contains_tangent_plane = false;
    bool hermitian_divides = false;
    bool v2_component = false;
    long double_count_lhs = 0;
    long double_count_rhs = 0;

    std::size_t size() const { return points.size(); }
};

inline IntersectionReport intersection_stats(const Form& form, const Surface& s)
{
    if (!s.non_degenerate()) throw degenerate_surface_error("intersection_stats requires a non-degenerate surface");
    const Field& f = s.field();
    const Space& space = s.space();
    const auto& spts = s.points();
    const auto& gens = s.generators();
    const int q = s.q();

    IntersectionReport r;
    r.form = form;
    r.q = q;
    r.d = form.degree();

    std::vector<char> zero(spts.size(), 0);
    for (std::size_t i = 0; i < spts.size(); ++i)
        if (evaluate(f, form, space.point(spts[i])).is_zero()) {
            zero[i] = 1;
            r.points.push_back(spts[i]);
        }

    if (r.points.size() == spts.size()) r.hermitian_divides = hermitian_divides(form, s);
    r.v2_component = r.hermitian_divides;

    // Rational vanishing on the whole line is necessary; the symbolic test decides.
    std::vector<char> in_jf(gens.size(), 0);
    for (std::uint32_t g = 0; g < gens.size(); ++g) {
        bool all = true;
        for (auto id : gens[g].points) all = all && zero[static_cast<std::size_t>(s.point_index(id))];
        if (all && line_contained(f, form, gens[g])) {
            in_jf[g] = 1;
            r.jf.push_back(g);
        }
    }
    for (const auto& g : gens)
        for (auto id : g.points) r.double_count_rhs += zero[static_cast<std::size_t>(s.point_index(id))];
    r.double_count_lhs = static_cast<long>(r.points.size()) * (q + 1);

    if (!r.v2_component) r.delta = static_cast<long>(r.d) * (q + 1) - static_cast<long>(r.jf.size());

    std::vector<int> mult(spts.size(), 0);
    for (auto g : r.jf)
        for (auto id : gens[g].points) ++mult[static_cast<std::size_t>(s.point_index(id))];
    for (std::size_t i = 0; i < spts.size(); ++i) {
        if (mult[i] > 0) r.multiplicities.emplace_back(spts[i], mult[i]);
        if (zero[i] && mult[i] == 0) r.surrogate_xprime.push_back(spts[i]);
    }

    // A tangent plane inside V(F) carries all q+1 generators through its point.
    for (std::size_t i = 0; i < spts.size(); ++i) {
        if (mult[i] != q + 1) continue;
        const Plane tp = s.tangent_plane(space.point(spts[i]));
        if (plane_contained(f, form, tp)) r.contained_tangent_planes.push_back(space.plane_id(tp));
    }
    std::sort(r.contained_tangent_planes.begin(), r.contained_tangent_planes.end());
    r.contains_tangent_plane = !r.contained_tangent_planes.empty();

    for (auto g : r.jf) {
        const Line& l = gens[g];
        GeneratorStats st;
        st.generator = g;
        for (const auto& pl : space.book(l)) st.book.push_back(space.plane_id(pl));
        st.a.assign(st.book.size(), 0);
        st.plane_in_vf.assign(st.book.size(), false);
        for (std::size_t b = 0; b < st.book.size(); ++b)
            st.plane_in_vf[b] = std::binary_search(r.contained_tangent_planes.begin(), r.contained_tangent_planes.end(), st.book[b]);

        for (auto id : l.points) {
            for (auto m : s.generators_through(static_cast<std::size_t>(s.point_index(id)))) {
                if (m == g || !in_jf[m]) continue;
                ++st.t_size;
                const Line& other = gens[m];
                PointId off = other.points.front() == id ? other.points[1] : other.points.front();
                const Plane span = space.plane_through(l.first, l.second, space.point(off));
                const auto pos = std::lower_bound(st.book.begin(), st.book.end(), space.plane_id(span)) - st.book.begin();
                ++st.a[static_cast<std::size_t>(pos)];
            }
        }
        r.min_t = r.min_t ? std::min(*r.min_t, st.t_size) : st.t_size;
        r.lines.push_back(std::move(st));
    }
    return r;
}

/// sum over generators of |l cap V(F)(F_{q^2})| against |X| (q+1).
struct DoubleCount {
    long lhs = 0;
    long rhs = 0;
};

inline DoubleCount incidence_double_count(const Form& form, const Surface& s)
{
    const Field& f = s.field();
    const auto& spts = s.points();
    std::vector<char> zero(spts.size(), 0);
    long x = 0;
    for (std::size_t i = 0; i < spts.size(); ++i)
        if (evaluate(f, form, s.space().point(spts[i])).is_zero()) {
            zero[i] = 1;
            ++x;
        }
    DoubleCount out;
    out.lhs = x * (s.q() + 1);
    for (const auto& g : s.generators())
        for (auto id : g.points) out.rhs += zero[static_cast<std::size_t>(s.point_index(id))];
    return out;
}

/**
 * Checks every identity the intersection data must satisfy and returns a
 * description of each one that fails (empty when all hold).
 */
inline std::vector<std::string> structural_violations(const IntersectionReport& r, const Surface& s)
{
    std::vector<std::string> out;
    const Space& space = s.space();
    const int q = r.q;
    if (r.double_count_lhs != r.double_count_rhs)
        out.push_back("incidence double count: " + std::to_string(r.double_count_lhs) + " != " + std::to_string(r.double_count_rhs));
    if (!r.v2_component) {
        if (!r.delta || *r.delta < 0) out.push_back("delta is negative");
        if (static_cast<long>(r.jf.size()) > static_cast<long>(r.d) * (q + 1)) out.push_back("|J_F| exceeds d(q+1)");
        if (!r.surrogate_xprime.empty() && r.delta && *r.delta < q + 1)
            out.push_back("rational point off J_F but delta = " + std::to_string(*r.delta) + " < q+1");
    }

    std::unordered_map<PointId, int> mult(r.multiplicities.begin(), r.multiplicities.end());
    const auto& gens = s.generators();
    for (const auto& st : r.lines) {
        int sum = 0;
        for (std::size_t b = 0; b < st.a.size(); ++b) {
            sum += st.a[b];
            if (!st.plane_in_vf[b] && (st.a[b] < 0 || st.a[b] > r.d - 1))
                out.push_back("a(Pi, l) = " + std::to_string(st.a[b]) + " outside [0, d-1] for generator " + std::to_string(st.generator));
        }
        if (sum != st.t_size) out.push_back("|T(l)| differs from the sum of a(Pi, l) for generator " + std::to_string(st.generator));

        for (auto id : gens[st.generator].points) {
            const PointId tp = space.plane_id(s.tangent_plane(space.point(id)));
            const auto pos = std::lower_bound(st.book.begin(), st.book.end(), tp);
            if (pos == st.book.end() || *pos != tp) {
                out.push_back("tangent plane at a generator point is missing from the book");
                continue;
            }
            const int a = st.a[static_cast<std::size_t>(pos - st.book.begin())];
            if (mult[id] != a + 1)
                out.push_back("r_P = " + std::to_string(mult[id]) + " but a(Pi_P, l) + 1 = " + std::to_string(a + 1));
        }
    }
    return out;
}

} // namespace herm
