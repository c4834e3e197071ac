/**
 * @file field.hpp
 * @brief Table-driven arithmetic in GF(q^2) with the q-Frobenius.
 *
 * Element encoding: an element is the polynomial c_0 + c_1 x + ... + c_{n-1} x^{n-1}
 * over GF(p), n = 2k, reduced modulo the field modulus. Its index is
 * c_0 + c_1 p + ... + c_{n-1} p^{n-1}. Hence index 0 is zero, index 1 is one and
 * index p is the class of x. Every serialized element uses this index.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace herm {

class field_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a computation hits a state that only a bug can produce.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Elem {
    std::uint16_t index = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint16_t i) : index(i) {}

    constexpr bool is_zero() const { return index == 0; }
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr Elem kZero{};
inline constexpr Elem kOne{1};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
    struct token {};

public:
    static constexpr int kMaxOrder = 1024;

    /// Builds GF(q^2). Throws field_error unless q is a prime power with q^2 <= 1024.
    static FieldPtr build(int q) { return std::make_shared<const Field>(token{}, q); }

    Field(token, int q);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    int order() const { return order_; }
    /// Coefficients c_0 .. c_{2k} of the monic modulus, constant term first.
    const std::vector<int>& modulus() const { return modulus_; }
    Elem primitive() const { return primitive_; }

    Elem add(Elem a, Elem b) const
    {
        if (p_ == 2) return Elem(static_cast<std::uint16_t>(a.index ^ b.index));
        return Elem(add_[static_cast<std::size_t>(a.index) * order_ + b.index]);
    }
    Elem neg(Elem a) const { return Elem(neg_[a.index]); }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const
    {
        if (a.is_zero() || b.is_zero()) return kZero;
        return Elem(exp_[log_[a.index] + log_[b.index]]);
    }
    /// Product of the elements with logs la and lb, both in [0, order-1).
    Elem mul_logs(int la, int lb) const { return Elem(exp_[static_cast<std::size_t>(la + lb)]); }

    Elem inv(Elem a) const
    {
        if (a.is_zero()) throw field_error("division by zero");
        return Elem(exp_[(order_ - 1 - log_[a.index]) % (order_ - 1)]);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// Square-and-multiply.
    Elem pow(Elem a, std::uint64_t e) const
    {
        Elem result = kOne;
        Elem base = a;
        while (e != 0) {
            if (e & 1U) result = mul(result, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return result;
    }

    Elem conj(Elem a) const { return Elem(conj_[a.index]); }
    Elem norm(Elem a) const { return mul(a, conj(a)); }
    Elem trace(Elem a) const { return add(a, conj(a)); }
    bool in_subfield(Elem a) const { return conj(a) == a; }

    /// The q elements fixed by conjugation, ascending by index.
    std::vector<Elem> subfield_elements() const
    {
        std::vector<Elem> out;
        for (int i = 0; i < order_; ++i)
            if (in_subfield(Elem(static_cast<std::uint16_t>(i)))) out.emplace_back(static_cast<std::uint16_t>(i));
        return out;
    }

    /// Discrete log to the primitive element; a must be nonzero.
    int log(Elem a) const
    {
        if (a.is_zero()) throw field_error("log of zero");
        return log_[a.index];
    }
    Elem exp(int e) const
    {
        const int m = order_ - 1;
        return Elem(exp_[((e % m) + m) % m]);
    }

    /// Embeds the integer n through the prime field.
    Elem from_int(long long n) const
    {
        const long long r = ((n % p_) + p_) % p_;
        return Elem(static_cast<std::uint16_t>(r));
    }

    std::vector<int> to_vector(Elem a) const
    {
        std::vector<int> v(static_cast<std::size_t>(2 * k_));
        int x = a.index;
        for (auto& c : v) {
            c = x % p_;
            x /= p_;
        }
        return v;
    }
    Elem from_vector(std::span<const int> v) const
    {
        int x = 0;
        for (std::size_t i = v.size(); i-- > 0;) x = x * p_ + (((v[i] % p_) + p_) % p_);
        return Elem(static_cast<std::uint16_t>(x));
    }

    /// Schoolbook product modulo the modulus; reference path for the log tables.
    Elem poly_mul(Elem a, Elem b) const;

private:
    int p_ = 0;
    int k_ = 0;
    int q_ = 0;
    int order_ = 0;
    std::vector<int> modulus_;
    Elem primitive_;
    std::vector<std::uint16_t> log_;
    std::vector<std::uint16_t> exp_;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> neg_;
    std::vector<std::uint16_t> conj_;
};

namespace detail {

using poly = std::vector<int>;

inline void trim(poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int inverse_mod(int a, int p)
{
    for (int x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw consistency_error("no inverse in prime field");
}

/// Remainder of a modulo b over GF(p); b nonzero.
inline poly poly_rem(poly a, const poly& b, int p)
{
    trim(a);
    const int lead_inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const int factor = (a.back() * lead_inv) % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const poly& f, int p)
{
    const int n = static_cast<int>(f.size()) - 1;
    for (int deg = 1; deg <= n / 2; ++deg) {
        int count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (int c = 0; c < count; ++c) {
            poly g(static_cast<std::size_t>(deg + 1));
            int x = c;
            for (int i = 0; i < deg; ++i) {
                g[static_cast<std::size_t>(i)] = x % p;
                x /= p;
            }
            g.back() = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

inline std::pair<int, int> prime_power(int q)
{
    if (q < 2) throw field_error("q must be a prime power, got " + std::to_string(q));
    int p = 2;
    while (q % p != 0) ++p;
    int k = 0;
    int r = q;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1) throw field_error("q must be a prime power, got " + std::to_string(q));
    return {p, k};
}

} // namespace detail

inline Field::Field(token, int q)
{
    const auto [p, k] = detail::prime_power(q);
    if (q > 32) throw field_error("q = " + std::to_string(q) + " exceeds the supported range (q^2 <= 1024)");
    p_ = p;
    k_ = k;
    q_ = q;
    order_ = q * q;
    const int n = 2 * k;

    // Lexicographically smallest monic irreducible of degree n, coefficients
    // compared from the constant term up: c_0 is the most significant digit.
    for (int idx = 0; idx < order_; ++idx) {
        detail::poly f(static_cast<std::size_t>(n + 1));
        int x = idx;
        for (int i = n - 1; i >= 0; --i) {
            f[static_cast<std::size_t>(i)] = x % p;
            x /= p;
        }
        f.back() = 1;
        if (detail::is_irreducible(f, p)) {
            modulus_ = f;
            break;
        }
    }
    if (modulus_.empty()) throw consistency_error("no irreducible modulus found");

    if (p != 2) {
        add_.resize(static_cast<std::size_t>(order_) * order_);
        for (int a = 0; a < order_; ++a) {
            const auto va = to_vector(Elem(static_cast<std::uint16_t>(a)));
            for (int b = 0; b < order_; ++b) {
                auto vb = to_vector(Elem(static_cast<std::uint16_t>(b)));
                for (std::size_t i = 0; i < vb.size(); ++i) vb[i] = (va[i] + vb[i]) % p;
                add_[static_cast<std::size_t>(a) * order_ + b] = from_vector(vb).index;
            }
        }
    }
    neg_.resize(static_cast<std::size_t>(order_));
    for (int a = 0; a < order_; ++a) {
        auto v = to_vector(Elem(static_cast<std::uint16_t>(a)));
        for (auto& c : v) c = (p - c) % p;
        neg_[static_cast<std::size_t>(a)] = from_vector(v).index;
    }

    // Smallest index generating the multiplicative group.
    const int group = order_ - 1;
    for (int g = 1; g < order_ && primitive_.is_zero(); ++g) {
        const Elem ge(static_cast<std::uint16_t>(g));
        Elem x = ge;
        int ord = 1;
        while (x != kOne) {
            x = poly_mul(x, ge);
            ++ord;
        }
        if (ord == group) primitive_ = ge;
    }
    if (primitive_.is_zero()) throw consistency_error("no primitive element");

    log_.assign(static_cast<std::size_t>(order_), 0);
    exp_.assign(static_cast<std::size_t>(2 * group), 0);
    Elem x = kOne;
    for (int i = 0; i < group; ++i) {
        exp_[static_cast<std::size_t>(i)] = x.index;
        exp_[static_cast<std::size_t>(i + group)] = x.index;
        log_[x.index] = static_cast<std::uint16_t>(i);
        x = poly_mul(x, primitive_);
    }

    conj_.resize(static_cast<std::size_t>(order_));
    for (int a = 0; a < order_; ++a) conj_[static_cast<std::size_t>(a)] = pow(Elem(static_cast<std::uint16_t>(a)), static_cast<std::uint64_t>(q)).index;
}

inline Elem Field::poly_mul(Elem a, Elem b) const
{
    const auto va = to_vector(a);
    const auto vb = to_vector(b);
    detail::poly prod(va.size() + vb.size(), 0);
    for (std::size_t i = 0; i < va.size(); ++i)
        for (std::size_t j = 0; j < vb.size(); ++j) prod[i + j] = (prod[i + j] + va[i] * vb[j]) % p_;
    auto r = detail::poly_rem(prod, modulus_, p_);
    r.resize(static_cast<std::size_t>(2 * k_), 0);
    return from_vector(r);
}

/// An element bound to its field; arithmetic between different fields throws.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem e) : field_(std::move(field)), e_(e) {}

    Elem elem() const { return e_; }
    const Field& field() const { return *field_; }

    FieldElement operator+(const FieldElement& o) const { return {field_, f(o).add(e_, o.e_)}; }
    FieldElement operator-(const FieldElement& o) const { return {field_, f(o).sub(e_, o.e_)}; }
    FieldElement operator*(const FieldElement& o) const { return {field_, f(o).mul(e_, o.e_)}; }
    FieldElement operator/(const FieldElement& o) const { return {field_, f(o).div(e_, o.e_)}; }
    FieldElement operator-() const { return {field_, field_->neg(e_)}; }

    FieldElement inv() const { return {field_, field_->inv(e_)}; }
    FieldElement pow(std::uint64_t n) const { return {field_, field_->pow(e_, n)}; }
    FieldElement conj() const { return {field_, field_->conj(e_)}; }
    FieldElement norm() const { return {field_, field_->norm(e_)}; }
    FieldElement trace() const { return {field_, field_->trace(e_)}; }

    bool operator==(const FieldElement& o) const
    {
        f(o);
        return e_ == o.e_;
    }

private:
    const Field& f(const FieldElement& o) const
    {
        if (field_.get() != o.field_.get()) throw field_error("arithmetic between elements of different fields");
        return *field_;
    }

    FieldPtr field_;
    Elem e_;
};

} // namespace herm
