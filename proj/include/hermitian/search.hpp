/**
 * @file search.hpp
 * @brief Maximizing |V(F) cap V2 (F_{q^2})| over degree-d forms.
 *
 * Exhaustive mode walks every scalar class (leading coefficient 1) in a fixed
 * order: classes are grouped by the position of the leading monomial, then by
 * the remaining coefficients read as base-q^2 digits. Workers claim disjoint
 * blocks of that index range; merging keeps the maximum and the smallest
 * argmax indices, so the result does not depend on the worker count.
 *
 * Every examined form is checked against the unconditional bound and, for
 * d <= q+1, against d(q^3+q^2-q)+q+1. A violation stops the run and is
 * reported with the offending form.
 */
#pragma once

#include "hermitian/bounds.hpp"
#include "hermitian/form.hpp"
#include "hermitian/sampling.hpp"
#include "hermitian/surface.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace herm {

class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::size_t worker_count(std::size_t requested)
{
    if (requested != 0) return requested;
    const auto hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// (s^m - 1)/(s - 1), saturated at UINT64_MAX.
inline std::uint64_t scalar_class_count(std::uint64_t s, std::size_t m)
{
    unsigned __int128 total = 0;
    unsigned __int128 block = 1;
    constexpr auto cap = static_cast<unsigned __int128>(UINT64_MAX);
    for (std::size_t i = 0; i < m; ++i) {
        total += block;
        if (total >= cap) return UINT64_MAX;
        block *= s;
        if (block > cap) block = cap;
    }
    return static_cast<std::uint64_t>(total);
}

/// Coefficient vector (leading entry 1) of the scalar class with the given index.
inline std::vector<Elem> decode_scalar_class(std::uint64_t index, std::uint64_t s, std::size_t m)
{
    std::vector<Elem> c(m, kZero);
    for (std::size_t lead = 0; lead < m; ++lead) {
        std::uint64_t block = 1;
        for (std::size_t i = lead + 1; i < m; ++i) block *= s;
        if (index >= block) {
            index -= block;
            continue;
        }
        c[lead] = kOne;
        for (std::size_t i = m; i-- > lead + 1;) {
            c[i] = Elem(static_cast<std::uint16_t>(index % s));
            index /= s;
        }
        return c;
    }
    throw std::out_of_range("scalar class index out of range");
}

/// Monomial values at every surface point, stored as discrete logs (-1 for zero).
class PointEvaluator {
public:
    PointEvaluator(const Surface& s, int d) : s_(s), d_(d), mons_(monomials(d))
    {
        const Field& f = s.field();
        const auto& pts = s.points();
        logs_.resize(pts.size() * mons_.size());
        for (std::size_t p = 0; p < pts.size(); ++p) {
            const Vec4 v = s.space().point(pts[p]);
            for (std::size_t k = 0; k < mons_.size(); ++k) {
                Elem x = kOne;
                for (std::size_t i = 0; i < 4; ++i) x = f.mul(x, f.pow(v[i], mons_[k][i]));
                logs_[p * mons_.size() + k] = x.is_zero() ? -1 : static_cast<std::int16_t>(f.log(x));
            }
        }
        for (const auto& g : s.generators()) {
            std::vector<std::uint32_t> idx;
            for (auto id : g.points) idx.push_back(static_cast<std::uint32_t>(s.point_index(id)));
            gens_.push_back(std::move(idx));
        }
    }

    std::size_t monomial_count() const { return mons_.size(); }

    /// Marks the surface points where the form vanishes; returns how many.
    std::size_t zeros(const std::vector<Elem>& coeffs, std::vector<char>& zero) const
    {
        const Field& f = s_.field();
        const std::size_t m = mons_.size();
        std::vector<std::pair<std::size_t, int>> nz;
        for (std::size_t k = 0; k < m; ++k)
            if (!coeffs[k].is_zero()) nz.emplace_back(k, f.log(coeffs[k]));
        const std::size_t n = s_.points().size();
        zero.assign(n, 0);
        std::size_t count = 0;
        for (std::size_t p = 0; p < n; ++p) {
            const std::int16_t* row = &logs_[p * m];
            Elem acc = kZero;
            for (const auto& [k, lc] : nz)
                if (row[k] >= 0) acc = f.add(acc, f.mul_logs(lc, row[k]));
            if (acc.is_zero()) {
                zero[p] = 1;
                ++count;
            }
        }
        return count;
    }

    /// Generators whose rational points all vanish. For d <= q^2 this is
    /// containment: a nonzero binary form of degree d has at most d roots.
    std::size_t contained_generators(const std::vector<char>& zero) const
    {
        std::size_t n = 0;
        for (const auto& g : gens_) {
            bool all = true;
            for (auto i : g) all = all && zero[i];
            n += all ? 1 : 0;
        }
        return n;
    }

    int degree() const { return d_; }

private:
    const Surface& s_;
    int d_;
    std::vector<Exponent> mons_;
    std::vector<std::int16_t> logs_;
    std::vector<std::vector<std::uint32_t>> gens_;
};

enum class SearchMode { exhaustive, random, structured };

inline const char* to_string(SearchMode m)
{
    switch (m) {
    case SearchMode::exhaustive: return "exhaustive";
    case SearchMode::random: return "random";
    case SearchMode::structured: return "structured";
    }
    return "?";
}

struct Falsification {
    Form form;
    std::string bound;
    long observed = 0;
    Rational limit;
};

struct SearchResult {
    int q = 0;
    int d = 0;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t examined = 0;
    std::uint64_t hermitian_multiples_skipped = 0;
    std::size_t max_points = 0;
    std::uint64_t argmax_count = 0;
    std::vector<Form> argmax;  ///< scalar-normalized, capped
    std::optional<std::uint64_t> seed;
    std::uint64_t samples = 0;
    double wall_seconds = 0;
    std::optional<Falsification> falsification;
};

struct SearchOptions {
    std::size_t workers = 0;  ///< 0 = hardware concurrency
    std::uint64_t budget = 10'000'000;
    std::size_t argmax_cap = 100'000;
    bool progress = false;
};

namespace detail {

/// Outcome for one form: nullopt when skipped as a Hermitian multiple.
struct Scored {
    std::size_t points = 0;
    std::optional<Falsification> violation;
};

inline std::optional<Scored> score_form(const Surface& s, const PointEvaluator& ev, const std::vector<Elem>& coeffs,
                                        std::vector<char>& zero)
{
    const int q = s.q();
    const int d = ev.degree();
    Scored out;
    out.points = ev.zeros(coeffs, zero);
    if (d >= q + 1 && out.points == s.points().size() && hermitian_divides(Form::from_dense(d, coeffs), s)) return std::nullopt;
    const auto jf = static_cast<std::int64_t>(ev.contained_generators(zero));
    const std::int64_t delta = static_cast<std::int64_t>(d) * (q + 1) - jf;
    const Rational observed(static_cast<std::int64_t>(out.points));
    const Rational tb = bounds::thm_bound(q, d, delta);
    if (observed > tb)
        out.violation = Falsification{Form::from_dense(d, coeffs), "thm_bound", static_cast<long>(out.points), tb};
    else if (d <= q + 1 && observed > Rational(bounds::sorensen(q, d)))
        out.violation = Falsification{Form::from_dense(d, coeffs), "sorensen", static_cast<long>(out.points), Rational(bounds::sorensen(q, d))};
    return out;
}

inline void keep_smallest(std::vector<std::uint64_t>& v, std::size_t cap)
{
    if (v.size() <= cap) return;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(cap), v.end());
    v.resize(cap);
}

} // namespace detail

inline void require_search_degree(const Surface& s, int d)
{
    if (!s.non_degenerate()) throw degenerate_surface_error("search requires a non-degenerate surface");
    if (d < 1 || d > s.q() + 1) throw bound_error("searches cover 1 <= d <= q+1, got d = " + std::to_string(d));
}

inline SearchResult exhaustive_search(const Surface& s, int d, const SearchOptions& opt = {})
{
    require_search_degree(s, d);
    const auto start = std::chrono::steady_clock::now();
    const auto sz = static_cast<std::uint64_t>(s.field().order());
    const std::size_t m = monomial_count(d);
    const std::uint64_t total = scalar_class_count(sz, m);
    if (total > opt.budget)
        throw budget_error("exhaustive search over " + std::to_string(total) + " scalar classes exceeds the budget of " +
                           std::to_string(opt.budget) + "; use random search");

    const PointEvaluator ev(s, d);
    constexpr std::uint64_t kBlock = 1 << 14;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> done{0};
    std::atomic<bool> stop{false};
    std::mutex mu;

    struct Local {
        std::size_t max = 0;
        std::vector<std::uint64_t> argmax;
        std::uint64_t count = 0;
        std::uint64_t skipped = 0;
        std::optional<std::pair<std::uint64_t, Falsification>> violation;
    };
    const std::size_t workers = worker_count(opt.workers);
    std::vector<Local> locals(workers);

    auto run = [&](std::size_t w) {
        Local& L = locals[w];
        std::vector<char> zero;
        while (!stop.load(std::memory_order_relaxed)) {
            const std::uint64_t begin = next.fetch_add(kBlock);
            if (begin >= total) break;
            const std::uint64_t end = std::min(total, begin + kBlock);
            std::vector<Elem> coeffs = decode_scalar_class(begin, sz, m);
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                if (idx != begin) coeffs = decode_scalar_class(idx, sz, m);
                const auto scored = detail::score_form(s, ev, coeffs, zero);
                if (!scored) {
                    ++L.skipped;
                    continue;
                }
                if (scored->violation) {
                    L.violation = {idx, *scored->violation};
                    stop = true;
                    break;
                }
                if (scored->points > L.max) {
                    L.max = scored->points;
                    L.argmax.clear();
                    L.count = 0;
                }
                if (scored->points == L.max) {
                    ++L.count;
                    L.argmax.push_back(idx);
                    if (L.argmax.size() > 2 * opt.argmax_cap) detail::keep_smallest(L.argmax, opt.argmax_cap);
                }
            }
            const auto before = done.fetch_add(end - begin);
            if (opt.progress && (before / 1'000'000) != ((before + end - begin) / 1'000'000)) {
                std::lock_guard lock(mu);
                std::cerr << "search q=" << s.q() << " d=" << d << ": " << (before + end - begin) << " / " << total
                          << " classes\n";
            }
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    SearchResult r;
    r.q = s.q();
    r.d = d;
    r.mode = SearchMode::exhaustive;
    r.examined = total;
    std::vector<std::uint64_t> argmax;
    for (const auto& L : locals) {
        r.hermitian_multiples_skipped += L.skipped;
        if (L.violation && (!r.falsification)) r.falsification = L.violation->second;
        if (L.max > r.max_points) {
            r.max_points = L.max;
            r.argmax_count = 0;
            argmax.clear();
        }
        if (L.max == r.max_points) {
            r.argmax_count += L.count;
            argmax.insert(argmax.end(), L.argmax.begin(), L.argmax.end());
        }
    }
    detail::keep_smallest(argmax, opt.argmax_cap);
    std::sort(argmax.begin(), argmax.end());
    for (auto idx : argmax) r.argmax.push_back(Form::from_dense(d, decode_scalar_class(idx, sz, m)));
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/**
 * Draws `samples` forms (uniform and structured in random mode, structured
 * only in structured mode), deduplicates scalar classes and scores each one.
 */
inline SearchResult random_search(const Surface& s, int d, std::uint64_t samples, std::uint64_t seed,
                                  SearchMode mode = SearchMode::random, std::size_t argmax_cap = 100'000)
{
    require_search_degree(s, d);
    if (samples < 1) throw bound_error("random search needs at least one sample");
    if (mode == SearchMode::exhaustive) throw bound_error("random_search takes random or structured mode");
    const auto start = std::chrono::steady_clock::now();
    const Field& f = s.field();
    const PointEvaluator ev(s, d);
    FormSampler sampler(s, d, seed);

    SearchResult r;
    r.q = s.q();
    r.d = d;
    r.mode = mode;
    r.seed = seed;
    r.samples = samples;
    std::set<std::vector<Elem>> seen;
    std::vector<std::vector<Elem>> argmax;
    std::vector<char> zero;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const Form form = normalized(f, mode == SearchMode::structured ? sampler.structured() : sampler.mixed());
        auto coeffs = form.dense();
        if (!seen.insert(coeffs).second) continue;
        ++r.examined;
        const auto scored = detail::score_form(s, ev, coeffs, zero);
        if (!scored) {
            ++r.hermitian_multiples_skipped;
            continue;
        }
        if (scored->violation) {
            r.falsification = scored->violation;
            break;
        }
        if (scored->points > r.max_points) {
            r.max_points = scored->points;
            r.argmax_count = 0;
            argmax.clear();
        }
        if (scored->points == r.max_points) {
            ++r.argmax_count;
            if (argmax.size() < argmax_cap) argmax.push_back(std::move(coeffs));
        }
    }
    std::sort(argmax.begin(), argmax.end());
    for (const auto& c : argmax) r.argmax.push_back(Form::from_dense(d, c));
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace herm
