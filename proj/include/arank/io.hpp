#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arank/betti.hpp"
#include "arank/constructions.hpp"
#include "arank/errors.hpp"
#include "arank/monomial_ideal.hpp"
#include "arank/polynomial.hpp"
#include "arank/simplicial_complex.hpp"
#include "arank/verifier.hpp"

namespace arank {

namespace detail {

struct TextLine {
    std::size_t number;
    std::size_t column;  // 1-based column of `text` in the original line
    std::string text;
};

// Splits into trimmed, comment-free, non-empty lines and pulls out an
// optional `vars: n` header.
inline std::vector<TextLine> content_lines(std::string_view text, std::optional<int>& vars) {
    std::vector<TextLine> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++number;
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t b = 0;
        while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
        std::size_t e = line.size();
        while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
        if (b == e) continue;
        std::string body(line.substr(b, e - b));
        if (body.rfind("vars:", 0) == 0) {
            if (vars || !out.empty()) throw ParseError("'vars:' must be the first entry", number, b + 1);
            std::string num = body.substr(5);
            std::size_t k = 0;
            while (k < num.size() && std::isspace(static_cast<unsigned char>(num[k]))) ++k;
            std::size_t d = k;
            while (d < num.size() && std::isdigit(static_cast<unsigned char>(num[d]))) ++d;
            if (d == k || d != num.size()) throw ParseError("expected 'vars: <n>'", number, b + 6 + k);
            int n = std::stoi(num.substr(k));
            if (n < 0 || n > kMaxAmbient) throw ParseError("vars out of range 0..64", number, b + 6 + k);
            vars = n;
            continue;
        }
        out.push_back({number, b + 1, std::move(body)});
    }
    return out;
}

// Reads "x<index>" at `pos`, advancing past it.
inline int read_variable(const TextLine& l, std::size_t& pos) {
    if (pos >= l.text.size() || l.text[pos] != 'x')
        throw ParseError("expected a variable like x3", l.number, l.column + pos);
    std::size_t d = pos + 1;
    while (d < l.text.size() && std::isdigit(static_cast<unsigned char>(l.text[d]))) ++d;
    if (d == pos + 1) throw ParseError("expected a variable index after 'x'", l.number, l.column + pos + 1);
    if (d - pos - 1 > 3) throw ParseError("variable index out of range", l.number, l.column + pos + 1);
    int i = std::stoi(l.text.substr(pos + 1, d - pos - 1));
    if (i < 1 || i > kMaxAmbient) throw ParseError("variable index out of range", l.number, l.column + pos + 1);
    pos = d;
    return i;
}

inline void check_ambient(const std::vector<std::pair<int, TextLine>>& used, std::optional<int> vars, int& n) {
    n = vars.value_or(0);
    for (const auto& [i, l] : used) {
        if (vars && i > *vars)
            throw ParseError("x" + std::to_string(i) + " exceeds vars: " + std::to_string(*vars), l.number, l.column);
        if (!vars) n = std::max(n, i);
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ideals: one monomial per line, "x1*x2*x3"; "1" is the unit monomial.

inline MonomialIdeal parse_ideal(std::string_view text) {
    std::optional<int> vars;
    auto lines = detail::content_lines(text, vars);
    std::vector<std::vector<int>> monos;
    std::vector<std::pair<int, detail::TextLine>> used;
    for (const auto& l : lines) {
        std::vector<int> idx;
        if (l.text != "1") {
            std::size_t pos = 0;
            while (true) {
                while (pos < l.text.size() && l.text[pos] == ' ') ++pos;
                std::size_t at = pos;
                int i = detail::read_variable(l, pos);
                if (std::find(idx.begin(), idx.end(), i) != idx.end())
                    throw ParseError("repeated variable x" + std::to_string(i) + " (monomials are squarefree)",
                                     l.number, l.column + at);
                idx.push_back(i);
                used.emplace_back(i, l);
                while (pos < l.text.size() && l.text[pos] == ' ') ++pos;
                if (pos == l.text.size()) break;
                if (l.text[pos] != '*')
                    throw ParseError(std::string("expected '*', found '") + l.text[pos] + "'", l.number,
                                     l.column + pos);
                ++pos;
            }
        }
        monos.push_back(std::move(idx));
    }
    int n = 0;
    detail::check_ambient(used, vars, n);
    std::vector<SquarefreeMonomial> gens;
    for (const auto& idx : monos) gens.emplace_back(VarSet::from_indices(n, idx));
    return minimalize(gens, n);
}

inline std::string format_ideal(const MonomialIdeal& I) {
    std::string out = "vars: " + std::to_string(I.ambient()) + "\n";
    for (const auto& g : I.generators()) out += g.to_string() + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Complexes: one facet per line, "x1 x3"; "{}" is the empty face.

inline SimplicialComplex parse_complex(std::string_view text) {
    std::optional<int> vars;
    auto lines = detail::content_lines(text, vars);
    std::vector<std::vector<int>> faces;
    std::vector<std::pair<int, detail::TextLine>> used;
    for (const auto& l : lines) {
        std::vector<int> idx;
        if (l.text != "{}") {
            std::size_t pos = 0;
            while (pos < l.text.size()) {
                std::size_t at = pos;
                int i = detail::read_variable(l, pos);
                if (std::find(idx.begin(), idx.end(), i) != idx.end())
                    throw ParseError("repeated vertex x" + std::to_string(i), l.number, l.column + at);
                idx.push_back(i);
                used.emplace_back(i, l);
                if (pos < l.text.size() && !std::isspace(static_cast<unsigned char>(l.text[pos])))
                    throw ParseError(std::string("expected whitespace, found '") + l.text[pos] + "'", l.number,
                                     l.column + pos);
                while (pos < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[pos]))) ++pos;
            }
        }
        faces.push_back(std::move(idx));
    }
    int n = 0;
    detail::check_ambient(used, vars, n);
    std::vector<VarSet> fs;
    for (const auto& idx : faces) fs.push_back(VarSet::from_indices(n, idx));
    return SimplicialComplex(n, fs);
}

inline std::string format_complex(const SimplicialComplex& c) {
    std::string out = "vars: " + std::to_string(c.ambient()) + "\n";
    for (const auto& f : c.facets()) out += (f.empty() ? std::string("{}") : f.to_string()) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Element lists: one polynomial per line.

inline std::vector<Polynomial> parse_elements(std::string_view text, int ambient_n = -1) {
    std::optional<int> vars;
    auto lines = detail::content_lines(text, vars);
    std::vector<Polynomial> raw;
    int n = vars.value_or(std::max(ambient_n, 0));
    for (const auto& l : lines) {
        Polynomial p = parse_polynomial(l.text, -1, l.number, l.column);
        if (vars && p.max_index() > *vars)
            throw ParseError("x" + std::to_string(p.max_index()) + " exceeds vars: " + std::to_string(*vars),
                             l.number, l.column);
        if (!vars) n = std::max(n, p.max_index());
        raw.push_back(std::move(p));
    }
    std::vector<Polynomial> out;
    for (auto& p : raw) out.push_back(p.widened(n));
    return out;
}

inline std::string format_elements(const std::vector<Polynomial>& elements) {
    std::string out;
    for (const auto& p : elements) out += p.to_string() + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const BettiTable& t) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [ij, b] : t.entries) entries.push_back({ij.first, ij.second, b});
    return {{"char", t.field_char}, {"entries", entries}};
}

inline BettiTable betti_from_json(const nlohmann::json& j) {
    BettiTable t;
    t.field_char = j.at("char").get<int>();
    for (const auto& e : j.at("entries")) t.entries[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<long>();
    return t;
}

inline nlohmann::json generators_json(const MonomialIdeal& I) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& g : I.generators()) a.push_back(g.to_string());
    return a;
}

inline nlohmann::json to_json(const RadicalReport& r) {
    nlohmann::json cov = nlohmann::json::array();
    for (const auto& c : r.coverage)
        cov.push_back({{"generator", c.generator.to_string()},
                       {"in_radical", c.in_radical},
                       {"refuted_by_sampling", c.refuted_by_sampling},
                       {"seconds", c.seconds}});
    nlohmann::json j = {{"containment_ok", r.containment_ok},
                        {"coverage", cov},
                        {"verdict", r.verdict},
                        {"basis_seconds", r.basis_seconds},
                        {"total_seconds", r.total_seconds}};
    if (r.counterexample) {
        nlohmann::json pt = nlohmann::json::array();
        for (const auto& v : r.counterexample->point) pt.push_back(v.str());
        j["counterexample"] = {{"point", pt},
                               {"zero_variables", r.counterexample->zero_variables.to_string()},
                               {"generator", r.counterexample->generator.to_string()}};
    }
    return j;
}

inline nlohmann::json to_json(const GeneratorWitness& w) {
    nlohmann::json elements = nlohmann::json::array();
    for (const auto& e : w.elements) elements.push_back(e.to_string());
    nlohmann::json j = {{"target", generators_json(w.target)},
                        {"elements", elements},
                        {"provenance", w.provenance},
                        {"verified", w.verified}};
    if (w.report) j["report"] = to_json(*w.report);
    return j;
}

}  // namespace arank
