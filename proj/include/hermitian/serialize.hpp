// JSON encodings. Elements are written as their integer index, points and
// planes as four indices, lines as their canonical point pair.
#pragma once

#include "hermitian/bounds.hpp"
#include "hermitian/census.hpp"
#include "hermitian/codes.hpp"
#include "hermitian/field.hpp"
#include "hermitian/form.hpp"
#include "hermitian/geometry.hpp"
#include "hermitian/intersection.hpp"
#include "hermitian/search.hpp"
#include "hermitian/surface.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace herm {

using json = nlohmann::ordered_json;

inline json to_json(const Vec4& v) { return json::array({v[0].index, v[1].index, v[2].index, v[3].index}); }

inline json to_json(const Line& l) { return json::array({to_json(l.first), to_json(l.second)}); }

inline json to_json(const Plane& p) { return to_json(p.coeffs); }

inline json field_json(const Field& f) { return {{"p", f.p()}, {"k", f.k()}, {"q", f.q()}, {"modulus", f.modulus()}}; }

inline json surface_json(const Surface& s)
{
    json m = json::array();
    for (const auto& row : s.matrix().entries())
        for (auto x : row) m.push_back(x.index);
    return {{"q", s.q()}, {"matrix", m}, {"rank", s.rank()}};
}

inline json to_json(const Form& f)
{
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(json::array({json::array({e[0], e[1], e[2], e[3]}), c.index}));
    return terms;
}

/// A form file: {"q": .., "d": .., "terms": [[[e0, e1, e2, e3], index], ...]}.
inline json form_file_json(int q, const Form& f) { return {{"q", q}, {"d", f.degree()}, {"terms", to_json(f)}}; }

struct FormFile {
    int q = 0;
    Form form;
};

inline FormFile parse_form_file(const json& j)
{
    try {
        FormFile out;
        out.q = j.at("q").get<int>();
        const int d = j.at("d").get<int>();
        if (d < 1) throw form_error("form degree must be at least 1");
        const int order = out.q * out.q;
        std::vector<std::pair<Exponent, Elem>> terms;
        for (const auto& t : j.at("terms")) {
            const auto& ej = t.at(0);
            if (ej.size() != 4) throw form_error("exponent tuples need four entries");
            Exponent e{};
            for (std::size_t i = 0; i < 4; ++i) {
                const int x = ej.at(i).get<int>();
                if (x < 0 || x > 255) throw form_error("exponent out of range");
                e[i] = static_cast<std::uint8_t>(x);
            }
            const int c = t.at(1).get<int>();
            if (c < 0 || c >= order) throw form_error("element index out of range for GF(q^2)");
            terms.emplace_back(e, Elem(static_cast<std::uint16_t>(c)));
        }
        out.form = Form::from_terms(d, terms);
        if (out.form.is_zero()) throw form_error("form has no nonzero coefficient");
        return out;
    } catch (const json::exception& e) {
        throw form_error(std::string("malformed form file: ") + e.what());
    }
}

inline json to_json(const Rational& r) { return {{"num", r.num}, {"den", r.den}}; }

inline json to_json(const IntersectionReport& r, bool verbose)
{
    json j;
    j["q"] = r.q;
    j["d"] = r.d;
    j["points"] = r.size();
    j["jf_size"] = r.jf.size();
    j["delta"] = r.delta ? json(*r.delta) : json(nullptr);
    j["surrogate_xprime_points"] = r.surrogate_xprime.size();
    j["min_t"] = r.min_t ? json(*r.min_t) : json(nullptr);
    json t = json::array();
    for (const auto& st : r.lines) t.push_back(st.t_size);
    j["t_sizes"] = t;
    j["contains_tangent_plane"] = r.contains_tangent_plane;
    j["hermitian_divides"] = r.hermitian_divides;
    j["v2_component"] = r.v2_component;
    j["double_count"] = {{"lhs", r.double_count_lhs}, {"rhs", r.double_count_rhs}};
    if (verbose) {
        j["point_ids"] = r.points;
        j["jf"] = r.jf;
        j["surrogate_xprime"] = r.surrogate_xprime;
        json a = json::array();
        for (const auto& st : r.lines) a.push_back({{"generator", st.generator}, {"book", st.book}, {"a", st.a}});
        j["a_table"] = a;
        json mult = json::array();
        for (const auto& [p, m] : r.multiplicities) mult.push_back(json::array({p, m}));
        j["multiplicities"] = mult;
        j["contained_tangent_planes"] = r.contained_tangent_planes;
    }
    return j;
}

inline json to_json(const BoundReport& b)
{
    json j;
    j["q"] = b.q;
    j["d"] = b.d;
    j["observed"] = b.observed;
    j["flags"] = {{"v2_component", b.v2_component},
                  {"tangent_plane_contained", b.tangent_plane_contained},
                  {"surrogate_xprime_empty", b.surrogate_empty},
                  {"jf_empty", b.jf_empty},
                  {"union_of_tangent_planes", b.union_of_tangent_planes ? json(*b.union_of_tangent_planes) : json(nullptr)},
                  {"extremal_pencil", b.extremal_pencil ? json(*b.extremal_pencil) : json(nullptr)}};
    json v = json::array();
    for (const auto& x : b.verdicts)
        v.push_back({{"bound", x.name},
                     {"value", x.value ? to_json(*x.value) : json(nullptr)},
                     {"applicable", x.applicable},
                     {"satisfied", x.satisfied}});
    j["verdicts"] = v;
    j["falsified"] = b.falsified();
    return j;
}

inline json to_json(const SearchResult& r)
{
    json j;
    j["q"] = r.q;
    j["d"] = r.d;
    j["mode"] = to_string(r.mode);
    j["examined"] = r.examined;
    j["hermitian_multiples_skipped"] = r.hermitian_multiples_skipped;
    j["max_points"] = r.max_points;
    j["argmax_count"] = r.argmax_count;
    json am = json::array();
    for (const auto& f : r.argmax) am.push_back(to_json(f));
    j["argmax"] = am;
    j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    if (r.mode != SearchMode::exhaustive) j["samples"] = r.samples;
    if (r.falsification)
        j["falsification"] = {{"form", to_json(r.falsification->form)},
                              {"bound", r.falsification->bound},
                              {"observed", r.falsification->observed},
                              {"limit", to_json(r.falsification->limit)}};
    else
        j["falsification"] = nullptr;
    return j;
}

inline json to_json(const CensusReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass()}});
    return {{"q", r.q},
            {"passed", r.passed()},
            {"planes", {{"tangent", r.tangent_planes}, {"non_tangent", r.non_tangent_planes}}},
            {"lines", {{"examined", r.lines_examined}, {"generator", r.generator_lines}, {"secant", r.secant_lines}, {"tangent", r.tangent_lines}}},
            {"points_examined", r.points_examined},
            {"checks", checks}};
}

inline json code_json(const EvaluationCode& c, std::optional<std::size_t> enumerated, std::optional<std::size_t> geometric)
{
    return {{"q", c.q},
            {"d", c.d},
            {"n", c.n},
            {"k", c.k},
            {"d_min_enumerated", enumerated ? json(*enumerated) : json(nullptr)},
            {"d_min_geometric", geometric ? json(*geometric) : json(nullptr)}};
}

} // namespace herm
