/**
 * @file form.hpp
 * @brief Homogeneous forms over GF(q^2) in x_0..x_3.
 *
 * Terms are kept in graded lexicographic order with x_0 > x_1 > x_2 > x_3,
 * leading term first. Restrictions to lines and planes reuse the same type
 * with the unused trailing variables at exponent 0.
 */
#pragma once

#include "hermitian/field.hpp"
#include "hermitian/geometry.hpp"
#include "hermitian/surface.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace herm {

class form_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Exponent = std::array<std::uint8_t, 4>;

inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2] + e[3]; }

/// Degree-d monomials in 4 variables, leading first.
inline std::vector<Exponent> monomials(int d)
{
    std::vector<Exponent> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b)
            for (int c = d - a - b; c >= 0; --c)
                out.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c),
                               static_cast<std::uint8_t>(d - a - b - c)});
    return out;
}

/// C(d+3, 3).
inline std::size_t monomial_count(int d)
{
    const auto n = static_cast<std::size_t>(d);
    return (n + 1) * (n + 2) * (n + 3) / 6;
}

class Form {
public:
    using Terms = std::map<Exponent, Elem, std::greater<>>;

    Form() = default;
    explicit Form(int degree) : degree_(degree) {}

    static Form from_terms(int degree, std::span<const std::pair<Exponent, Elem>> terms)
    {
        if (degree < 0) throw form_error("negative degree");
        Form f(degree);
        for (const auto& [e, c] : terms) {
            if (total_degree(e) != degree) throw form_error("monomial degree does not match the form degree");
            if (f.terms_.count(e) != 0) throw form_error("repeated monomial");
            f.set(e, c);
        }
        return f;
    }

    /// coeffs[i] belongs to monomials(degree)[i].
    static Form from_dense(int degree, std::span<const Elem> coeffs)
    {
        const auto mons = monomials(degree);
        if (coeffs.size() != mons.size()) throw form_error("dense coefficient vector has the wrong length");
        Form f(degree);
        for (std::size_t i = 0; i < mons.size(); ++i) f.set(mons[i], coeffs[i]);
        return f;
    }

    /// Linear form c_0 x_0 + ... + c_3 x_3.
    static Form linear(const Vec4& c)
    {
        Form f(1);
        for (std::size_t i = 0; i < 4; ++i) {
            Exponent e{};
            e[i] = 1;
            f.set(e, c[i]);
        }
        return f;
    }

    static Form constant(Elem c)
    {
        Form f(0);
        f.set(Exponent{}, c);
        return f;
    }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    Elem coeff(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? kZero : it->second;
    }

    void set(const Exponent& e, Elem c)
    {
        if (c.is_zero())
            terms_.erase(e);
        else
            terms_[e] = c;
    }

    /// Leading term; the form must be nonzero.
    const std::pair<const Exponent, Elem>& leading() const
    {
        if (terms_.empty()) throw form_error("zero form has no leading term");
        return *terms_.begin();
    }

    std::vector<Elem> dense() const
    {
        const auto mons = monomials(degree_);
        std::vector<Elem> out(mons.size());
        for (std::size_t i = 0; i < mons.size(); ++i) out[i] = coeff(mons[i]);
        return out;
    }

    friend bool operator==(const Form&, const Form&) = default;

private:
    int degree_ = 0;
    Terms terms_;
};

inline Form add(const Field& f, const Form& a, const Form& b)
{
    if (a.degree() != b.degree() && !a.is_zero() && !b.is_zero()) throw form_error("adding forms of different degree");
    Form out = a.is_zero() ? Form(b.degree()) : a;
    for (const auto& [e, c] : b.terms()) out.set(e, f.add(out.coeff(e), c));
    return out;
}

inline Form scale(const Field& f, Elem lambda, const Form& a)
{
    Form out(a.degree());
    for (const auto& [e, c] : a.terms()) out.set(e, f.mul(lambda, c));
    return out;
}

inline Form multiply(const Field& f, const Form& a, const Form& b)
{
    Form out(a.degree() + b.degree());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exponent e;
            for (std::size_t i = 0; i < 4; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            out.set(e, f.add(out.coeff(e), f.mul(ca, cb)));
        }
    return out;
}

/// Scales so the leading coefficient is 1 (scalar-class representative).
inline Form normalized(const Field& f, const Form& a)
{
    if (a.is_zero()) return a;
    return scale(f, f.inv(a.leading().second), a);
}

struct Division {
    Form quotient;
    Form remainder;
};

/// Multivariate division by a single divisor under the fixed monomial order.
inline Division divide(const Field& f, const Form& a, const Form& b)
{
    if (b.is_zero()) throw form_error("division by the zero form");
    const auto& [lead_e, lead_c] = b.leading();
    const Elem lead_inv = f.inv(lead_c);
    Division out{Form(a.degree() - b.degree()), Form(a.degree())};
    Form rest = a;
    while (!rest.is_zero()) {
        const auto [e, c] = *rest.terms().begin();
        bool divisible = true;
        Exponent shift{};
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] < lead_e[i]) divisible = false;
            else shift[i] = static_cast<std::uint8_t>(e[i] - lead_e[i]);
        }
        if (!divisible) {
            out.remainder.set(e, c);
            rest.set(e, kZero);
            continue;
        }
        const Elem factor = f.mul(c, lead_inv);
        out.quotient.set(shift, f.add(out.quotient.coeff(shift), factor));
        for (const auto& [be, bc] : b.terms()) {
            Exponent m;
            for (std::size_t i = 0; i < 4; ++i) m[i] = static_cast<std::uint8_t>(be[i] + shift[i]);
            rest.set(m, f.sub(rest.coeff(m), f.mul(factor, bc)));
        }
    }
    return out;
}

inline std::optional<Form> divide_exact(const Field& f, const Form& a, const Form& b)
{
    if (b.degree() > a.degree()) return std::nullopt;
    auto d = divide(f, a, b);
    if (!d.remainder.is_zero()) return std::nullopt;
    return std::move(d.quotient);
}

inline Elem evaluate(const Field& f, const Form& form, const Vec4& p)
{
    const int d = form.degree();
    std::array<std::vector<Elem>, 4> powers;
    for (std::size_t i = 0; i < 4; ++i) {
        powers[i].resize(static_cast<std::size_t>(d + 1));
        powers[i][0] = kOne;
        for (int k = 1; k <= d; ++k) powers[i][static_cast<std::size_t>(k)] = f.mul(powers[i][static_cast<std::size_t>(k - 1)], p[i]);
    }
    Elem acc = kZero;
    for (const auto& [e, c] : form.terms()) {
        Elem t = c;
        for (std::size_t i = 0; i < 4; ++i) t = f.mul(t, powers[i][e[i]]);
        acc = f.add(acc, t);
    }
    return acc;
}

/**
 * F(a P + b Q) as a binary form; entry j is the coefficient of a^{d-j} b^j.
 */
inline std::vector<Elem> restrict_to_line(const Field& f, const Form& form, const Vec4& p, const Vec4& q)
{
    const auto d = static_cast<std::size_t>(form.degree());
    // pw[i][k] = (p_i a + q_i b)^k, dense in b-degree.
    std::array<std::vector<std::vector<Elem>>, 4> pw;
    for (std::size_t i = 0; i < 4; ++i) {
        pw[i].assign(d + 1, {});
        pw[i][0] = {kOne};
        for (std::size_t k = 1; k <= d; ++k) {
            const auto& prev = pw[i][k - 1];
            std::vector<Elem> next(k + 1, kZero);
            for (std::size_t j = 0; j < prev.size(); ++j) {
                next[j] = f.add(next[j], f.mul(prev[j], p[i]));
                next[j + 1] = f.add(next[j + 1], f.mul(prev[j], q[i]));
            }
            pw[i][k] = std::move(next);
        }
    }
    std::vector<Elem> out(d + 1, kZero);
    std::vector<Elem> acc;
    for (const auto& [e, c] : form.terms()) {
        acc = {c};
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            const auto& fac = pw[i][e[i]];
            std::vector<Elem> next(acc.size() + fac.size() - 1, kZero);
            for (std::size_t x = 0; x < acc.size(); ++x) {
                if (acc[x].is_zero()) continue;
                for (std::size_t y = 0; y < fac.size(); ++y) next[x + y] = f.add(next[x + y], f.mul(acc[x], fac[y]));
            }
            acc = std::move(next);
        }
        for (std::size_t j = 0; j < acc.size(); ++j) out[j] = f.add(out[j], acc[j]);
    }
    return out;
}

/// The line lies in V(F) over the algebraic closure: the restriction vanishes identically.
inline bool line_contained(const Field& f, const Form& form, const Line& l)
{
    for (auto c : restrict_to_line(f, form, l.first, l.second))
        if (!c.is_zero()) return false;
    return true;
}

/// F(y_0 u + y_1 v + y_2 w) as a ternary form in y_0, y_1, y_2.
inline Form restrict_to_plane(const Field& f, const Form& form, const std::array<Vec4, 3>& basis)
{
    std::array<Form, 4> lin;
    for (std::size_t i = 0; i < 4; ++i) {
        lin[i] = Form(1);
        for (std::size_t j = 0; j < 3; ++j) {
            Exponent e{};
            e[j] = 1;
            lin[i].set(e, basis[j][i]);
        }
    }
    const int d = form.degree();
    std::array<std::vector<Form>, 4> pw;
    for (std::size_t i = 0; i < 4; ++i) {
        pw[i].push_back(Form::constant(kOne));
        for (int k = 1; k <= d; ++k) pw[i].push_back(multiply(f, pw[i].back(), lin[i]));
    }
    Form out(d);
    for (const auto& [e, c] : form.terms()) {
        Form t = Form::constant(c);
        for (std::size_t i = 0; i < 4; ++i)
            if (e[i] != 0) t = multiply(f, t, pw[i][e[i]]);
        out = add(f, out, t);
    }
    return out;
}

inline bool plane_contained(const Field& f, const Form& form, const Plane& plane)
{
    Matrix m{Row(plane.coeffs.begin(), plane.coeffs.end())};
    const auto ns = nullspace(f, m, 4);
    std::array<Vec4, 3> basis{};
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 4; ++i) basis[j][i] = ns[j][i];
    return restrict_to_plane(f, form, basis).is_zero();
}

/// sum_ij A_ij x_i x_j^q.
inline Form hermitian_form(const Surface& s)
{
    const Field& f = s.field();
    const int q = s.q();
    Form out(q + 1);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Exponent e{};
            e[i] = static_cast<std::uint8_t>(e[i] + 1);
            e[j] = static_cast<std::uint8_t>(e[j] + q);
            out.set(e, f.add(out.coeff(e), s.matrix()(i, j)));
        }
    return out;
}

/// Exact division by the surface's defining form; false whenever d < q+1.
inline bool hermitian_divides(const Form& form, const Surface& s)
{
    if (form.degree() < s.q() + 1 || form.is_zero()) return false;
    return divide_exact(s.field(), form, hermitian_form(s)).has_value();
}

} // namespace herm
