#include "support.hpp"

#include "vtxalg/errors.hpp"
#include "vtxalg/io.hpp"

#include <gtest/gtest.h>

using namespace vtx;
using fx::vec;

namespace {

std::string fixture(const std::string &name)
{
    return std::string(VTXALG_FIXTURE_DIR) + "/" + name;
}

const char *kSmall = R"({
  "format_version": 1,
  "name": "q",
  "basis": ["one"],
  "dim": 1,
  "vacuum": "one",
  "entries": [{"u": "one", "v": "one", "n": -1, "result": {"one": "RESULT"}}]
})";

std::string small(const std::string &result)
{
    std::string s = kSmall;
    s.replace(s.find("RESULT"), 6, result);
    return s;
}

} // namespace

TEST(Parse, A3Fixture)
{
    auto f = parse_algebra_file(fixture("a3.json"));
    EXPECT_EQ(f.algebra.dim(), 3u);
    EXPECT_EQ(f.algebra.basis[f.algebra.vacuum], "one");
    EXPECT_EQ(f.algebra.y, fx::a3().y);
    ASSERT_TRUE(f.operators);
    EXPECT_EQ(f.operators->ops.size(), 1u);
}

TEST(Parse, FixturesMatchIndependentBuilders)
{
    EXPECT_EQ(parse_algebra_file(fixture("ut2.json")).algebra.y, fx::ut2().y);
    EXPECT_EQ(parse_algebra_file(fixture("z22_twist.json")).algebra.y, fx::z22_twist().y);
    EXPECT_EQ(parse_algebra_file(fixture("m2_a3.json")).algebra.y, matrix_algebra(fx::a3(), 2).y);
    EXPECT_EQ(parse_algebra_file(fixture("m2q.json")).algebra.y, full_matrix_algebra(2).y);
    EXPECT_EQ(parse_algebra_file(fixture("cross_a2z2.json")).algebra.y,
              cross_product(fx::a2(), fx::a2_sign_action()).y);
}

TEST(Parse, RationalForms)
{
    EXPECT_NO_THROW(parse_algebra_json(small("1")));
    EXPECT_THROW(parse_algebra_json(small("1/0")), ParseError);
    EXPECT_THROW(parse_algebra_json(small("2/2")), ParseError);
    EXPECT_THROW(parse_algebra_json(small("0.5")), ParseError);
}

TEST(Parse, RationalsMustBeStrings)
{
    std::string s = small("1");
    s.replace(s.find("\"1\""), 3, "1");
    EXPECT_THROW(parse_algebra_json(s), ParseError);
}

TEST(Parse, UnknownNameIsValidationError)
{
    std::string s = small("1");
    s.replace(s.find("\"v\": \"one\""), 10, "\"v\": \"two\"");
    EXPECT_THROW(parse_algebra_json(s), ValidationError);
}

TEST(Parse, MalformedJsonIsParseError)
{
    EXPECT_THROW(parse_algebra_json("{\"format_version\": 1,"), ParseError);
    EXPECT_THROW(parse_algebra_json("{\"format_version\": 2}"), ParseError);
    EXPECT_THROW(parse_algebra_json("{\"format_version\": 1}"), ParseError);
}

TEST(Parse, FailingAxiomsAreValidationErrors)
{
    // Vacuum acting by 2 violates Y(1, x) = 1.
    EXPECT_THROW(parse_algebra_json(small("2")), ValidationError);
}

TEST(Parse, DuplicateEntryRejected)
{
    std::string s = kSmall;
    const std::string e = R"({"u": "one", "v": "one", "n": -1, "result": {"one": "1"}})";
    s.replace(s.find("[{"), s.find("}]") - s.find("[{") + 2, "[" + e + ", " + e + "]");
    EXPECT_THROW(parse_algebra_json(s), ValidationError);
}

TEST(Emit, RoundTripIsByteStable)
{
    for (const char *name : {"a3.json", "z22_twist.json", "m2_a3.json", "cross_a2z2.json"}) {
        auto f = parse_algebra_file(fixture(name));
        const std::string once = emit_algebra_json(f);
        const std::string twice = emit_algebra_json(parse_algebra_json(once));
        EXPECT_EQ(once, twice) << name;
    }
}

TEST(Emit, VectorText)
{
    EXPECT_EQ(vector_text(vec({0, 1, -2}), {"a", "b", "c"}), R"({"b":"1","c":"-2"})");
}

TEST(RMapOf, KindsFromFixtures)
{
    EXPECT_EQ(rmap_of(parse_algebra_file(fixture("m2_a3.json")))->kind(), "tensor-swap");
    EXPECT_EQ(rmap_of(parse_algebra_file(fixture("z22_twist.json")))->kind(), "cocycle");
    EXPECT_EQ(rmap_of(parse_algebra_file(fixture("cross_a2z2.json")))->kind(), "cross");
    EXPECT_FALSE(rmap_of(parse_algebra_file(fixture("a3.json"))));
}
