#include "hitproblem/golden.hpp"
#include "hitproblem/io.hpp"
#include "hitproblem/weight_filtration.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace hitproblem;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text)
{
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST(Golden, Loads)
{
    const auto& g = GoldenTable::instance();
    EXPECT_EQ(g.v_count(), 21u);
    EXPECT_EQ(g.main_dim(1), 45u);
    EXPECT_EQ(g.main_dim(9), 651u);
    EXPECT_EQ(g.qp0_bar(), 100u);
    EXPECT_THROW(g.main_dim(0), OutOfRange);
}

TEST(Golden, Breakdown)
{
    const auto& g = GoldenTable::instance();
    auto two = g.golden(2);
    EXPECT_EQ(two.total, 190u);
    EXPECT_EQ(two.qp_omega, 15u);
    EXPECT_EQ(two.b, 75u);
    EXPECT_EQ(g.golden(3).total, 480u);
    EXPECT_EQ(g.golden(4).qp_omega, 30u);
    EXPECT_EQ(g.golden(6).qp_omega, 31u);
    for (int d = 2; d <= 8; ++d) {
        auto x = g.golden(d);
        EXPECT_EQ(x.total, x.qp_omega + x.qp0_bar + x.b) << d;
        EXPECT_EQ(x.qp_omega, top_weight_dimension(5, d));
    }
    EXPECT_THROW(g.golden(0), OutOfRange);
}

TEST(Golden, VFamily)
{
    const auto& g = GoldenTable::instance();
    for (int d = 1; d <= 14; ++d) {
        auto v = g.instantiate_v(d);
        ASSERT_EQ(v.size(), 21u);
        if (d >= 2) {
            EXPECT_EQ((std::set<Monomial, DescendingOrder>(v.begin(), v.end()).size()), 21u);
        }
        for (const auto& m : v)
            EXPECT_EQ(m.degree(), 4u * ((1u << d) - 1)) << d << " " << m.to_string();
    }
    EXPECT_EQ(g.instantiate_v(2).front(), (Monomial{1, 1, 3, 7}));
    EXPECT_THROW(g.instantiate_v(0), OutOfRange);
    EXPECT_THROW(g.instantiate_v(15), OutOfRange);
}

TEST(Golden, TamperedFileIsRejected)
{
    std::ifstream in(HITPROBLEM_GOLDEN_PATH);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto at = text.find("\"qp0_bar\": 100");
    ASSERT_NE(at, std::string::npos);
    text.replace(at, 14, "\"qp0_bar\": 101");
    auto p = write_temp("hitproblem_golden_tampered.json", text);
    EXPECT_THROW(GoldenTable::load(p.string()), ParseError);
    std::filesystem::remove(p);
    EXPECT_THROW(GoldenTable::load("/nonexistent/golden.json"), ParseError);
    auto bad = write_temp("hitproblem_golden_bad.json", "{\"payload\": {}}");
    EXPECT_THROW(GoldenTable::load(bad.string()), ParseError);
    std::filesystem::remove(bad);
}

TEST(Golden, Checksum)
{
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
}

TEST(Io, TextRoundTrip)
{
    Polynomial f(3, {Monomial{3, 1, 0}, Monomial{1, 2, 1}, Monomial{0, 0, 4}});
    std::stringstream ss;
    ss << "# comment\n";
    write_polynomial(ss, f);
    ss << "\n1 1\n";
    auto g = read_polynomial(ss);
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(*g, f);
    auto h = read_polynomial(ss);
    ASSERT_TRUE(h.has_value());
    EXPECT_EQ(*h, Polynomial(Monomial{1, 1}));
    EXPECT_FALSE(read_polynomial(ss).has_value());
}

TEST(Io, TextErrors)
{
    std::stringstream mixed("1 2\n1 2 3\n");
    EXPECT_THROW(read_polynomial(mixed), ArityMismatch);
    std::stringstream junk("1 x\n");
    EXPECT_THROW(read_polynomial(junk), ParseError);
}

TEST(Io, JsonRoundTrip)
{
    Polynomial f(2, {Monomial{3, 1}, Monomial{2, 2}});
    EXPECT_EQ(polynomial_from_json(polynomial_json(f)), f);
    EXPECT_EQ(monomial_from_json(monomial_json(Monomial{7, 3, 1})), (Monomial{7, 3, 1}));
    EXPECT_EQ(polynomial_from_json(nlohmann::json::array(), 4), Polynomial::zero(4));
    EXPECT_THROW(polynomial_from_json(nlohmann::json::array()), ParseError);
    EXPECT_THROW(monomial_from_json(nlohmann::json::parse("[1, \"a\"]")), ParseError);
    EXPECT_THROW(polynomial_from_json(nlohmann::json::parse("[[1], [1, 2]]")), ArityMismatch);

    auto j = basis_json(2, 3, {Monomial{2, 1}, Monomial{1, 2}});
    EXPECT_EQ(j["dim"], 2);
    EXPECT_EQ(j["admissibles"][1], nlohmann::json::parse("[1, 2]"));
}
