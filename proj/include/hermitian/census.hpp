// Incidence census of a non-degenerate Hermitian surface: point and generator
// counts, plane sections, the line trichotomy, books and tangent-plane lines.
#pragma once

#include "hermitian/surface.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace herm {

struct CensusCheck {
    std::string name;
    std::int64_t expected = 0;
    std::int64_t observed = 0;

    bool pass() const { return expected == observed; }
};

struct CensusReport {
    int q = 0;
    std::vector<CensusCheck> checks;
    std::int64_t tangent_planes = 0;
    std::int64_t non_tangent_planes = 0;
    std::int64_t lines_examined = 0;
    std::int64_t generator_lines = 0;
    std::int64_t secant_lines = 0;
    std::int64_t tangent_lines = 0;
    std::int64_t points_examined = 0;

    bool passed() const
    {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
};

struct CensusOptions {
    std::size_t max_lines = 0;   ///< 0 = every line; otherwise an evenly strided subset
    std::size_t max_points = 0;  ///< same, for the tangent-plane census
};

namespace detail {

template <class T>
std::vector<T> strided(std::vector<T> all, std::size_t cap)
{
    if (cap == 0 || all.size() <= cap) return all;
    std::vector<T> out;
    out.reserve(cap);
    for (std::size_t i = 0; i < cap; ++i) out.push_back(all[i * all.size() / cap]);
    return out;
}

} // namespace detail

inline CensusReport run_census(const Surface& s, const CensusOptions& opt = {})
{
    if (!s.non_degenerate()) throw degenerate_surface_error("census requires a non-degenerate surface");
    const Space& space = s.space();
    const Field& f = s.field();
    const std::int64_t q = s.q();
    const std::int64_t q2 = q * q;
    const std::int64_t q3 = q2 * q;
    const auto npts = static_cast<std::int64_t>(s.points().size());

    CensusReport r;
    r.q = s.q();
    auto check = [&](std::string name, std::int64_t expected, std::int64_t observed) {
        r.checks.push_back({std::move(name), expected, observed});
    };

    check("surface points = (q^3+1)(q^2+1)", (q3 + 1) * (q2 + 1), npts);
    check("generators = (q^3+1)(q+1)", (q3 + 1) * (q + 1), static_cast<std::int64_t>(s.generators().size()));
    std::int64_t on_q1 = 0;
    for (std::size_t i = 0; i < s.points().size(); ++i) on_q1 += static_cast<std::int64_t>(s.generators_through(i).size()) == q + 1;
    check("every surface point lies on q+1 generators", npts, on_q1);

    const auto planes = space.planes();
    std::int64_t two_sizes = 0;
    std::int64_t big_is_tangent = 0;
    std::int64_t dual_agrees = 0;
    for (const auto& pl : planes) {
        const auto n = static_cast<std::int64_t>(s.section_size(pl));
        const bool big = n == q3 + q2 + 1;
        const bool tangent = s.is_tangent_plane(pl);
        two_sizes += (n == q3 + 1 || big) ? 1 : 0;
        big_is_tangent += big == tangent ? 1 : 0;
        r.tangent_planes += tangent ? 1 : 0;
        if (s.is_canonical()) {
            Elem acc = kZero;
            for (auto c : pl.coeffs) acc = f.add(acc, f.norm(c));
            dual_agrees += acc.is_zero() == big ? 1 : 0;
        }
    }
    const auto nplanes = static_cast<std::int64_t>(planes.size());
    r.non_tangent_planes = nplanes - r.tangent_planes;
    check("plane sections have q^3+1 or q^3+q^2+1 points", nplanes, two_sizes);
    check("sections of size q^3+q^2+1 are exactly the tangent planes", nplanes, big_is_tangent);
    if (s.is_canonical()) check("dual criterion sum c_i^(q+1) = 0 marks the large sections", nplanes, dual_agrees);
    check("tangent planes = surface points", npts, r.tangent_planes);

    const auto all_lines = space.lines();
    const bool every_line = opt.max_lines == 0 || all_lines.size() <= opt.max_lines;
    const auto lines = detail::strided(all_lines, opt.max_lines);
    std::int64_t classified = 0;
    std::int64_t gen_books = 0;
    std::int64_t tan_books = 0;
    std::int64_t sec_books = 0;
    for (const auto& l : lines) {
        LineClass c;
        try {
            c = s.classify_line(l);
        } catch (const consistency_error&) {
            continue;
        }
        ++classified;
        const int tp = s.classify_book(l).tangent_planes;
        switch (c.kind) {
        case LineKind::generator:
            ++r.generator_lines;
            gen_books += tp == q2 + 1 ? 1 : 0;
            break;
        case LineKind::tangent:
            ++r.tangent_lines;
            tan_books += tp == 1 ? 1 : 0;
            break;
        case LineKind::secant:
            ++r.secant_lines;
            sec_books += tp == q + 1 ? 1 : 0;
            break;
        }
    }
    r.lines_examined = static_cast<std::int64_t>(lines.size());
    check("lines meet the surface in 1, q+1 or q^2+1 points", r.lines_examined, classified);
    if (every_line) check("lines with q^2+1 surface points are the generators", (q3 + 1) * (q + 1), r.generator_lines);
    check("generator books hold q^2+1 tangent planes", r.generator_lines, gen_books);
    check("tangent-line books hold 1 tangent plane", r.tangent_lines, tan_books);
    check("secant books hold q+1 tangent planes", r.secant_lines, sec_books);

    const auto pts = detail::strided(s.points(), opt.max_points);
    std::int64_t gens_ok = 0;
    std::int64_t tans_ok = 0;
    std::int64_t rest_ok = 0;
    for (auto id : pts) {
        const auto c = s.tangent_plane_census(space.point(id));
        gens_ok += c.generators == q + 1 ? 1 : 0;
        tans_ok += c.tangents_through_point == q2 - q ? 1 : 0;
        rest_ok += (c.secants_through_point == 0 && c.tangents_off_point == 0 && c.generators_off_point == 0) ? 1 : 0;
    }
    r.points_examined = static_cast<std::int64_t>(pts.size());
    check("tangent plane at P: q+1 generators through P", r.points_examined, gens_ok);
    check("tangent plane at P: q^2-q tangent lines through P", r.points_examined, tans_ok);
    check("tangent plane at P: every other line is a secant", r.points_examined, rest_ok);
    return r;
}

} // namespace herm
