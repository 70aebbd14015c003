#pragma once

// Text and JSON forms. A monomial is a line of space-separated exponents; a
// polynomial is one monomial per line, ended by a blank line or end of input.
// JSON uses arrays of exponent arrays.

#include "hitproblem/errors.hpp"
#include "hitproblem/monomial.hpp"
#include "hitproblem/polynomial.hpp"

#include <json.hpp>

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hitproblem {

inline std::string monomial_line(const Monomial& m)
{
    std::string s;
    for (int j = 0; j < m.vars(); ++j)
        s += (j ? " " : "") + std::to_string(m[j]);
    return s;
}

/// Reads one polynomial. Lines starting with '#' are skipped. Returns nullopt
/// at end of input when nothing was read. All monomials must agree on k.
inline std::optional<Polynomial> read_polynomial(std::istream& in)
{
    std::vector<Monomial> terms;
    std::string line;
    bool any = false;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            if (any)
                break;
            continue;
        }
        if (line[first] == '#')
            continue;
        Monomial m = parse_monomial(line);
        if (!terms.empty() && m.vars() != terms.front().vars())
            throw ArityMismatch("monomial '" + line + "' has " + std::to_string(m.vars()) + " exponents, expected " +
                                std::to_string(terms.front().vars()));
        terms.push_back(m);
        any = true;
    }
    if (!any)
        return std::nullopt;
    const int k = terms.front().vars();
    return Polynomial(k, std::move(terms));
}

inline void write_polynomial(std::ostream& out, const Polynomial& f)
{
    for (const auto& m : f)
        out << monomial_line(m) << '\n';
}

inline void write_monomials(std::ostream& out, const std::vector<Monomial>& ms)
{
    for (const auto& m : ms)
        out << monomial_line(m) << '\n';
}

inline nlohmann::json monomial_json(const Monomial& m)
{
    auto arr = nlohmann::json::array();
    for (int j = 0; j < m.vars(); ++j)
        arr.push_back(m[j]);
    return arr;
}

inline nlohmann::json monomials_json(const std::vector<Monomial>& ms)
{
    auto arr = nlohmann::json::array();
    for (const auto& m : ms)
        arr.push_back(monomial_json(m));
    return arr;
}

inline nlohmann::json polynomial_json(const Polynomial& f)
{
    return monomials_json(f.terms());
}

inline Monomial monomial_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw ParseError("monomial JSON must be an array of exponents");
    std::vector<int> e;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw ParseError("exponent must be an integer");
        e.push_back(x.get<int>());
    }
    return Monomial(e);
}

inline Polynomial polynomial_from_json(const nlohmann::json& j, int k = 0)
{
    if (!j.is_array())
        throw ParseError("polynomial JSON must be an array of exponent arrays");
    std::vector<Monomial> terms;
    for (const auto& t : j) {
        terms.push_back(monomial_from_json(t));
        if (terms.back().vars() != terms.front().vars())
            throw ArityMismatch("polynomial JSON mixes variable counts");
    }
    if (terms.empty()) {
        if (k < 1)
            throw ParseError("empty polynomial JSON needs an explicit variable count");
        return Polynomial(k);
    }
    const int vars = terms.front().vars();
    return Polynomial(vars, std::move(terms));
}

/// {k, n, dim, admissibles: [[exponents], ...]}.
inline nlohmann::json basis_json(int k, std::uint64_t n, const std::vector<Monomial>& admissibles)
{
    return {{"k", k}, {"n", n}, {"dim", admissibles.size()}, {"admissibles", monomials_json(admissibles)}};
}

}  // namespace hitproblem
