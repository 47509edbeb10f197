#include <gtest/gtest.h>

#include "orenil/algebra_io.hpp"
#include "orenil/errors.hpp"
#include "orenil/examples.hpp"

using namespace orenil;
using namespace orenil::io;

namespace
{

const char *kUpper2 = R"({
  "coeff_ring": "rationals",
  "rank": 3,
  "basis_names": ["e11", "e12", "e22"],
  "structure_constants": [[0,0,0,"1"], [0,1,1,"1"], [1,2,1,"1"], [2,2,2,"1"]],
  "derivations": {"inner_e12": ["0","0","0", "0","0","0", "0","0","0"],
                  "half": [0, 0, 0, "0", "1/2", 0, 0, 0, 0]},
  "identities": {"comm": {"degree": 2, "terms": [{"perm": [2,1], "coeff": "1"}]}}
})";

std::string error_of(std::string_view text)
{
    try
    {
        parse_algebra(text, "doc");
    }
    catch (const Error &e)
    {
        return e.what();
    }
    return "";
}

} // namespace

TEST(Load, RoundTrip)
{
    auto any = parse_algebra(kUpper2);
    ASSERT_TRUE(std::holds_alternative<AlgebraFile<Rational>>(any));
    const auto &f = std::get<AlgebraFile<Rational>>(any);
    EXPECT_EQ(f.algebra.rank(), 3);
    EXPECT_EQ(f.derivations.size(), 2u);
    EXPECT_EQ(f.derivations.at("half")(1, 1), Rational(1, 2));
    EXPECT_EQ(f.identities.at("comm").degree(), 2);

    const std::string text = write_algebra(f);
    auto again = std::get<AlgebraFile<Rational>>(parse_algebra(text));
    EXPECT_EQ(write_algebra(again), text);
    EXPECT_EQ(again.algebra.constants().size(), 4u);
}

TEST(Load, PrimeField)
{
    AlgebraFile<Zp> f{examples::truncated_polynomial(3), {}, {}};
    f.derivations.emplace("d", examples::d_dt(f.algebra));
    auto any = parse_algebra(write_algebra(f));
    ASSERT_TRUE(std::holds_alternative<AlgebraFile<Zp>>(any));
    const auto &g = std::get<AlgebraFile<Zp>>(any);
    EXPECT_EQ(g.algebra.ring().characteristic(), 3u);
    EXPECT_EQ(g.algebra.unit(), std::optional<Index>(0));
    EXPECT_EQ(g.derivations.at("d"), f.derivations.at("d"));
}

TEST(Load, SyntaxErrorsHaveLineAndColumn)
{
    const std::string e = error_of("{\n  \"rank\": 3,\n  oops\n}");
    EXPECT_NE(e.find("doc:3:3"), std::string::npos) << e;
}

TEST(Load, FieldErrorsNameThePath)
{
    std::string base = kUpper2;
    auto replaced = [&](const std::string &from, const std::string &to) {
        std::string s = base;
        s.replace(s.find(from), from.size(), to);
        return error_of(s);
    };
    EXPECT_NE(replaced("[1,2,1,\"1\"]", "[1,2,5,\"1\"]").find("/structure_constants/2/2"), std::string::npos);
    EXPECT_NE(replaced("\"1/2\"", "\"0.5\"").find("/derivations/half/4"), std::string::npos);
    EXPECT_NE(replaced("\"rationals\"", "\"reals\"").find("/coeff_ring"), std::string::npos);
    EXPECT_NE(replaced("\"rationals\"", "{\"prime\": 4}").find("/coeff_ring/prime"), std::string::npos);
    EXPECT_NE(replaced("[2,1]", "[1,2]").find("/identities/comm"), std::string::npos);
    EXPECT_NE(replaced("\"rank\": 3", "\"rank\": 2").find("/basis_names"), std::string::npos);
    EXPECT_NE(replaced("\"coeff_ring\": \"rationals\"", "\"coeff_ring\": \"integers\"").find("/derivations/half/4"),
              std::string::npos);
}

TEST(Load, AssociativityIsChecked)
{
    const char *bad = R"({"coeff_ring": "rationals", "rank": 2, "basis_names": ["e1", "e2"],
                          "structure_constants": [[0,0,1,"1"], [1,0,0,"1"]]})";
    EXPECT_THROW(parse_algebra(bad), AlgebraError);
}

TEST(Expressions, Parse)
{
    auto u = examples::upper_triangular(3, true);
    auto p = parse_poly(u, "e12 + e23*x");
    EXPECT_EQ(p, orepoly::DiffPoly<Rational>(3, {u.basis_vector(0), u.basis_vector(2)}));
    auto q = parse_poly(u, "-1/2*e13*x^2 + 3*e12 - e12");
    EXPECT_EQ(q.coefficient(0), Vector<Rational>(2 * u.basis_vector(0)));
    EXPECT_EQ(q.coefficient(2), Vector<Rational>(Rational(-1, 2) * u.basis_vector(1)));
    EXPECT_EQ(format_poly(u, q), "2*e12 - 1/2*e13*x^2");
    EXPECT_EQ(parse_element(u, "x^0*e23"), u.basis_vector(2));
    EXPECT_TRUE(parse_poly(u, "0").is_zero());

    auto list = parse_element_list(u, "e12, e13 ,e23");
    EXPECT_EQ(list.size(), 3u);
    EXPECT_EQ(parse_poly_list(u, "e12 + e23*x; e13").size(), 2u);

    EXPECT_THROW(parse_element(u, "e12*x"), MalformedInput);
    EXPECT_THROW(parse_poly(u, "e12*e23"), MalformedInput);
    EXPECT_THROW(parse_poly(u, "2*x"), MalformedInput);
    EXPECT_THROW(parse_poly(u, "e99"), MalformedInput);
    EXPECT_THROW(parse_poly(u, "e12 +"), MalformedInput);
    EXPECT_THROW(parse_poly(u, "0.5*e12"), MalformedInput);
}

TEST(Expressions, NumericBasisNames)
{
    auto f = examples::truncated_polynomial(3);
    EXPECT_EQ(parse_element(f, "1"), f.basis_vector(0));
    EXPECT_EQ(parse_element(f, "2*1 + 1*t"), Vector<Zp>(f.basis_vector(0) * Zp::make(2, 3) + f.basis_vector(1)));
    EXPECT_EQ(format_element(f, parse_element(f, "1/2*t^2")), "2*t^2");
    EXPECT_EQ(format_element(f, f.zero()), "0");
}
