#pragma once

// Reference values for P_5 in degrees 4(2^d - 1) and the 21-element family
// spanning (QP_4) in those degrees, loaded from data/golden.json.
//
// The file holds {"payload": ..., "checksum": hex}. The checksum is 64-bit
// FNV-1a over the compact, key-sorted serialization of the payload.

#include "hitproblem/errors.hpp"
#include "hitproblem/monomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#ifndef HITPROBLEM_GOLDEN_PATH
#define HITPROBLEM_GOLDEN_PATH "data/golden.json"
#endif

namespace hitproblem {

inline std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

struct GoldenDims
{
    std::uint64_t total = 0;
    std::uint64_t qp_omega = 0;  // dim QP_5(omega_(5,d))
    std::uint64_t qp0_bar = 0;   // dim QP_5^0(bar omega_(5,d)), d >= 2
    std::uint64_t b = 0;         // dim QP_5^+(bar omega_(5,d))
};

class GoldenTable
{
  public:
    static GoldenTable load(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open golden data file " + path);
        nlohmann::json doc;
        try {
            in >> doc;
        }
        catch (const nlohmann::json::exception& e) {
            throw ParseError("golden data: " + std::string(e.what()));
        }
        if (!doc.contains("payload") || !doc.contains("checksum"))
            throw ParseError("golden data lacks payload or checksum");
        const auto& p = doc["payload"];
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(p.dump())));
        if (doc["checksum"].get<std::string>() != hex)
            throw ParseError("golden data checksum mismatch: file says " + doc["checksum"].get<std::string>() +
                             ", payload hashes to " + hex);

        GoldenTable t;
        for (const auto& [key, value] : p.at("main_dims").items())
            t.main_.push_back({parse_key(key), value.get<std::uint64_t>()});
        for (const auto& [key, value] : p.at("b_counts").items())
            t.b_.push_back({parse_key(key), value.get<std::uint64_t>()});
        t.qp0_bar_ = p.at("qp0_bar").get<std::uint64_t>();
        for (const auto& tmpl : p.at("v_family")) {
            std::vector<std::vector<int>> vars;
            for (const auto& e : tmpl)
                vars.push_back(e.get<std::vector<int>>());
            if (vars.size() != 4)
                throw ParseError("v template must have 4 exponents");
            t.v_.push_back(std::move(vars));
        }
        if (t.v_.size() != 21)
            throw ParseError("v family must have 21 templates");
        t.check_arithmetic();
        return t;
    }

    /// HITPROBLEM_GOLDEN overrides the compiled-in path.
    static const GoldenTable& instance()
    {
        static const GoldenTable t = [] {
            const char* env = std::getenv("HITPROBLEM_GOLDEN");
            return load(env && *env ? env : HITPROBLEM_GOLDEN_PATH);
        }();
        return t;
    }

    std::uint64_t main_dim(int d) const { return lookup(main_, d, "main_dims"); }
    std::uint64_t b_count(int d) const { return lookup(b_, d, "b_counts"); }
    std::uint64_t qp0_bar() const { return qp0_bar_; }

    /// dim QP_5(omega_(5,d)) = sum_{t=1}^{min(5,d)} C(5,t).
    static std::uint64_t qp_omega(int d)
    {
        std::uint64_t total = 0, c = 1;
        for (int t = 1; t <= std::min(5, d); ++t) {
            c = c * static_cast<std::uint64_t>(5 - t + 1) / static_cast<std::uint64_t>(t);
            total += c;
        }
        return total;
    }

    GoldenDims golden(int d) const
    {
        if (d < 1)
            throw OutOfRange("golden values need d >= 1");
        GoldenDims g;
        g.total = main_dim(d);
        g.qp_omega = qp_omega(d);
        g.qp0_bar = d >= 2 ? qp0_bar_ : 0;
        g.b = b_count(d);
        return g;
    }

    /// v_{d,1}, ..., v_{d,21} in P_4. For d = 1 the 2^{d-1} - 1 exponents are 0.
    std::vector<Monomial> instantiate_v(int d) const
    {
        if (d < 1 || d > 14)
            throw OutOfRange("instantiate_v needs 1 <= d <= 14");
        std::vector<Monomial> out;
        for (const auto& tmpl : v_) {
            Monomial m(4);
            for (int j = 0; j < 4; ++j) {
                std::int64_t e = -1;
                for (int s : tmpl[static_cast<std::size_t>(j)])
                    e += std::int64_t(1) << (d + s);
                m.set(j, static_cast<unsigned>(e));
            }
            out.push_back(m);
        }
        return out;
    }

    std::size_t v_count() const { return v_.size(); }

  private:
    struct Key
    {
        int d;
        bool open;  // "4+" covers every d >= 4
    };

    static Key parse_key(const std::string& key)
    {
        bool open = !key.empty() && key.back() == '+';
        std::string digits = open ? key.substr(0, key.size() - 1) : key;
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad golden key '" + key + "'");
        return {std::stoi(digits), open};
    }

    struct KeyedValue
    {
        Key key;
        std::uint64_t value;
    };

    static std::uint64_t lookup(const std::vector<KeyedValue>& table, int d, const char* what)
    {
        for (const auto& e : table)
            if (e.key.d == d || (e.key.open && d >= e.key.d))
                return e.value;
        throw OutOfRange(std::string("no ") + what + " entry for d=" + std::to_string(d));
    }

    // total = qp_omega + 100 + b for d >= 2.
    void check_arithmetic() const
    {
        for (int d = 2; d <= 6; ++d)
            if (main_dim(d) != qp_omega(d) + qp0_bar_ + b_count(d))
                throw InvariantViolation("golden table inconsistent at d=" + std::to_string(d));
    }

    std::vector<KeyedValue> main_, b_;
    std::uint64_t qp0_bar_ = 0;
    std::vector<std::vector<std::vector<int>>> v_;
};

}  // namespace hitproblem
