/**
 * @file bounds.hpp
 * @brief Upper bounds on |V(F) cap V2 (F_{q^2})|, their hypotheses, and the
 *        extremal constructions that attain them.
 *
 * Bound names used in reports:
 *   sorensen   d(q^3+q^2-q)+q+1
 *   thm_bound  d(q^3+q^2-d+2) - delta/(q+1) (q^2-d+1)       unconditional
 *   cor0       dq^3+(d-1)q^2+1-(d-1)(d-2)                   rational point off J_F
 *   bound1     q^2+1+(d-1)(q^3+q)+(q^2-q)X                  see applicability below
 *   bound2     (d(q+1)-delta)(q^2+1-X/d)
 *   cor2       dq^3+(d-1)q^2+1                              no tangent plane in V(F)
 *   notan      cor2 value, for d <= q and F not a product of tangent planes
 */
#pragma once

#include "hermitian/form.hpp"
#include "hermitian/intersection.hpp"
#include "hermitian/surface.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace herm {

/// Exact fraction with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n) {}  // NOLINT: implicit from integers is intended
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d)
    {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const auto g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend auto operator<=>(Rational a, Rational b) { return a.num * b.den <=> b.num * a.den; }

    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

namespace bounds {

inline std::int64_t sorensen(std::int64_t q, std::int64_t d) { return d * (q * q * q + q * q - q) + q + 1; }

inline std::int64_t cor0(std::int64_t q, std::int64_t d) { return d * q * q * q + (d - 1) * q * q + 1 - (d - 1) * (d - 2); }

inline Rational thm_bound(std::int64_t q, std::int64_t d, std::int64_t delta)
{
    return Rational(d * (q * q * q + q * q - d + 2)) - Rational(delta * (q * q - d + 1), q + 1);
}

inline std::int64_t bound1(std::int64_t q, std::int64_t d, std::int64_t x)
{
    return q * q + 1 + (d - 1) * (q * q * q + q) + (q * q - q) * x;
}

inline Rational bound2(std::int64_t q, std::int64_t d, std::int64_t delta, std::int64_t x)
{
    return Rational(d * (q + 1) - delta) * (Rational(q * q + 1) - Rational(x, d));
}

inline std::int64_t cor2(std::int64_t q, std::int64_t d) { return d * q * q * q + (d - 1) * q * q + 1; }

} // namespace bounds

struct BoundVerdict {
    std::string name;
    std::optional<Rational> value;
    bool applicable = false;
    bool satisfied = true;
};

struct BoundReport {
    int q = 0;
    int d = 0;
    long observed = 0;
    bool v2_component = false;
    bool tangent_plane_contained = false;
    bool surrogate_empty = true;
    bool jf_empty = true;
    std::optional<bool> union_of_tangent_planes;
    std::optional<bool> extremal_pencil;  ///< d distinct tangent planes through one secant
    std::vector<BoundVerdict> verdicts;

    bool falsified() const
    {
        for (const auto& v : verdicts)
            if (v.applicable && !v.satisfied) return true;
        return false;
    }

    const BoundVerdict* find(const std::string& name) const
    {
        for (const auto& v : verdicts)
            if (v.name == name) return &v;
        return nullptr;
    }
};

class bound_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline BoundReport evaluate_bounds(const IntersectionReport& r)
{
    if (r.v2_component) throw bound_error("bounds do not apply when the Hermitian surface is a component of V(F)");
    BoundReport b;
    b.q = r.q;
    b.d = r.d;
    b.observed = static_cast<long>(r.size());
    b.tangent_plane_contained = r.contains_tangent_plane;
    b.surrogate_empty = r.surrogate_xprime.empty();
    b.jf_empty = r.jf.empty();
    const std::int64_t q = r.q;
    const std::int64_t d = r.d;
    const std::int64_t delta = *r.delta;
    const Rational observed(b.observed);

    auto add = [&](std::string name, std::optional<Rational> value, bool applicable) {
        BoundVerdict v{std::move(name), value, applicable, true};
        if (applicable && value) v.satisfied = observed <= *value;
        b.verdicts.push_back(std::move(v));
    };

    const bool line_case = !b.tangent_plane_contained && b.surrogate_empty && !b.jf_empty;
    add("thm_bound", bounds::thm_bound(q, d, delta), true);
    add("cor0", Rational(bounds::cor0(q, d)), !b.surrogate_empty);
    add("bound1", r.min_t ? std::optional<Rational>(bounds::bound1(q, d, *r.min_t)) : std::nullopt, line_case);
    add("bound2", r.min_t ? std::optional<Rational>(bounds::bound2(q, d, delta, *r.min_t)) : std::nullopt, line_case);
    add("cor2", Rational(bounds::cor2(q, d)), !b.tangent_plane_contained);
    add("sorensen", Rational(bounds::sorensen(q, d)), d <= q + 1);
    return b;
}

/**
 * Factors F into linear forms of tangent planes when possible. Only tangent
 * planes contained in V(F) can divide F, so those are the candidates, tried
 * in ascending plane id.
 */
inline std::optional<std::vector<Plane>> tangent_plane_factors(const Form& form, const Surface& s, const IntersectionReport& r)
{
    const Field& f = s.field();
    const Space& space = s.space();
    Form rest = form;
    std::vector<Plane> factors;
    for (auto pid : r.contained_tangent_planes) {
        const Plane plane = space.plane(pid);
        const Form lin = Form::linear(plane.coeffs);
        while (rest.degree() > 0) {
            auto quot = divide_exact(f, rest, lin);
            if (!quot) break;
            rest = std::move(*quot);
            factors.push_back(plane);
        }
    }
    if (rest.degree() != 0) return std::nullopt;
    return factors;
}

/// d distinct tangent planes that all contain one secant line (any single tangent plane qualifies).
inline bool is_extremal_pencil(const std::vector<Plane>& planes, const Surface& s)
{
    if (planes.empty()) return false;
    for (const auto& p : planes)
        if (!s.is_tangent_plane(p)) return false;
    if (planes.size() == 1) return true;
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t j = i + 1; j < planes.size(); ++j)
            if (planes[i] == planes[j]) return false;
    const Space& space = s.space();
    const Line axis = space.meet(planes[0], planes[1]);
    if (s.classify_line(axis).kind != LineKind::secant) return false;
    for (const auto& p : planes)
        if (!space.line_in_plane(axis, p)) return false;
    return true;
}

struct TheoremCheck {
    IntersectionReport stats;
    BoundReport bounds;
    std::vector<std::string> structural;  ///< violated identities, normally empty
    std::optional<std::vector<Plane>> factors;

    bool ok() const { return structural.empty() && !bounds.falsified(); }
};

inline TheoremCheck check_theorems(const Form& form, const Surface& s)
{
    TheoremCheck out;
    out.stats = intersection_stats(form, s);
    out.structural = structural_violations(out.stats, s);
    out.bounds = evaluate_bounds(out.stats);
    out.factors = tangent_plane_factors(form, s, out.stats);
    out.bounds.union_of_tangent_planes = out.factors.has_value();
    out.bounds.extremal_pencil = out.factors && is_extremal_pencil(*out.factors, s);

    const int q = s.q();
    const int d = form.degree();
    BoundVerdict notan{"notan", Rational(bounds::cor2(q, d)), !out.factors && d <= q, true};
    if (notan.applicable) notan.satisfied = Rational(out.bounds.observed) <= *notan.value;
    out.bounds.verdicts.push_back(notan);
    return out;
}

/// A secant line of s: the coordinate line x_2 = x_3 = 0 when it is one.
inline Line pick_secant(const Surface& s)
{
    const Space& space = s.space();
    Vec4 e0{};
    Vec4 e1{};
    e0[0] = kOne;
    e1[1] = kOne;
    Line l = space.line_through(e0, e1);
    if (s.classify_line(l).kind == LineKind::secant) return l;
    for (auto& cand : space.lines())
        if (s.classify_line(cand).kind == LineKind::secant) return cand;
    throw consistency_error("surface has no secant line");
}

/// Product of d tangent planes through a common secant, smallest plane ids first.
inline Form build_extremal_pencil(const Surface& s, int d)
{
    const int q = s.q();
    if (d < 1 || d > q + 1) throw bound_error("extremal pencil needs 1 <= d <= q+1, got d = " + std::to_string(d));
    const auto book = s.classify_book(pick_secant(s));
    std::vector<Plane> tangent;
    for (const auto& p : book.planes)
        if (s.is_tangent_plane(p)) tangent.push_back(p);
    if (tangent.size() != static_cast<std::size_t>(q + 1)) throw consistency_error("secant book without q+1 tangent planes");
    Form out = Form::constant(kOne);
    for (int i = 0; i < d; ++i) out = multiply(s.field(), out, Form::linear(tangent[static_cast<std::size_t>(i)].coeffs));
    return out;
}

/// alpha (x_0^{q+1} + x_1^{q+1}) + x_2^{q+1} + x_3^{q+1}, alpha in GF(q) \ {0, 1}.
inline Form build_grid_example(const Surface& s, Elem alpha)
{
    const Field& f = s.field();
    const int q = s.q();
    if (q == 2) throw bound_error("grid example needs q > 2");
    if (!f.in_subfield(alpha) || alpha.is_zero() || alpha == kOne)
        throw bound_error("grid example needs alpha in GF(q) \\ {0, 1}");
    Form out(q + 1);
    const auto e = static_cast<std::uint8_t>(q + 1);
    out.set({e, 0, 0, 0}, alpha);
    out.set({0, e, 0, 0}, alpha);
    out.set({0, 0, e, 0}, kOne);
    out.set({0, 0, 0, e}, kOne);
    return out;
}

} // namespace herm
