#include "support.hpp"

#include "vtxalg/errors.hpp"
#include "vtxalg/suite.hpp"

#include <gtest/gtest.h>

using namespace vtx;

namespace {

AlgebraFile load(const std::string &name)
{
    return parse_algebra_file(std::string(VTXALG_FIXTURE_DIR) + "/" + name);
}

std::vector<const SuiteRecord *> records(const SuiteReport &r, const std::string &check)
{
    std::vector<const SuiteRecord *> out;
    for (const auto &rec : r.records)
        if (rec.check == check)
            out.push_back(&rec);
    return out;
}

} // namespace

TEST(Suite, A3AllPasses)
{
    auto rep = run_suite(load("a3.json"), "all");
    EXPECT_EQ(rep.exit_code(), 0);
    EXPECT_EQ(rep.count(RecordVerdict::Fail), 0u);
    EXPECT_EQ(rep.count(RecordVerdict::Inconclusive), 0u);
    for (const auto *r : records(rep, "locality"))
        EXPECT_EQ(r->order, std::make_pair(std::string("k"), 0));
    for (const auto *r : records(rep, "weak-associativity"))
        EXPECT_EQ(r->order, std::make_pair(std::string("l"), 0));
    ASSERT_TRUE(rep.closure);
    EXPECT_EQ(rep.closure->status, "Closed");
}

TEST(Suite, Ut2LocalityIsAClassification)
{
    auto rep = run_suite(load("ut2.json"), "locality");
    EXPECT_EQ(rep.exit_code(), 0);
    ASSERT_EQ(rep.classification.size(), 1u);
    EXPECT_EQ(rep.classification[0].second, "nonlocal");
    std::size_t nonlocal = 0;
    for (const auto *r : records(rep, "locality"))
        if (r->verdict == RecordVerdict::Classified) {
            ++nonlocal;
            EXPECT_FALSE(r->witnesses.empty());
        }
    EXPECT_EQ(nonlocal, 2u);
}

TEST(Suite, TwistJacobiWithCocycleFactors)
{
    SuiteOptions o;
    o.q = "from-cocycle";
    auto rep = run_suite(load("z22_twist.json"), "jacobi", o);
    EXPECT_EQ(rep.count(RecordVerdict::Pass), rep.records.size());
    bool minus = false;
    for (const auto &r : rep.records)
        minus |= r.note.find("q = -1") != std::string::npos;
    EXPECT_TRUE(minus);
}

TEST(Suite, TwistWithPlainLocalityIsNonlocal)
{
    SuiteOptions o;
    o.q = "1";
    auto rep = run_suite(load("z22_twist.json"), "locality", o);
    EXPECT_EQ(rep.classification[0].second, "nonlocal");
    EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Suite, FromCocycleNeedsCocycle)
{
    SuiteOptions o;
    o.q = "from-cocycle";
    EXPECT_THROW(run_suite(load("a3.json"), "locality", o), ValidationError);
}

TEST(Suite, CorruptedTableFailsWithReproducibleWitness)
{
    auto f = load("a3.json");
    // (t2)_{-1} t = t2 breaks associativity but keeps the vacuum axioms.
    f.algebra.y.set(2, 1, -1, fx::vec({0, 0, 1}));
    auto rep = run_suite(f, "axioms");
    EXPECT_EQ(rep.exit_code(), 1);
    const SuiteRecord *failed = nullptr;
    for (const auto &r : rep.records)
        if (r.verdict == RecordVerdict::Fail) {
            EXPECT_FALSE(r.witnesses.empty()) << r.check;
            if (!failed)
                failed = &r;
        }
    ASSERT_NE(failed, nullptr);
    SuiteOptions o;
    o.only = failed->check;
    o.tuple = failed->tuple;
    auto again = run_suite(f, "axioms", o);
    ASSERT_EQ(again.records.size(), 1u);
    EXPECT_EQ(again.records[0].verdict, RecordVerdict::Fail);
    EXPECT_EQ(emit_report(again, ReportFormat::Json).find("\"witnesses\": []"), std::string::npos);
}

TEST(Suite, ReportsAreDeterministic)
{
    auto f = load("m2q.json");
    SuiteOptions one, many;
    one.threads = 1;
    many.threads = 4;
    EXPECT_EQ(emit_report(run_suite(f, "all", one), ReportFormat::Json),
              emit_report(run_suite(f, "all", many), ReportFormat::Json));
}

TEST(Suite, TextShowsWitnessExponentAndSides)
{
    auto rep = run_suite(load("ut2.json"), "locality");
    const std::string text = emit_report(rep, ReportFormat::Text);
    EXPECT_NE(text.find("witness locality at [x1^0 x2^0] lhs {\"E12\":\"1\"} rhs {}"),
              std::string::npos);
}

TEST(Suite, PassOnlyJsonHasZeroFailures)
{
    auto rep = run_suite(load("a3.json"), "axioms");
    EXPECT_NE(emit_report(rep, ReportFormat::Json).find("\"failures\": 0"), std::string::npos);
}

TEST(Suite, JacobiLikeUsesTheFileRMap)
{
    for (const char *name : {"m2_a3.json", "z22_twist.json", "cross_a2z2.json"}) {
        auto rep = run_suite(load(name), "jacobi-like");
        ASSERT_EQ(rep.records.size(), 1u) << name;
        EXPECT_EQ(rep.records[0].verdict, RecordVerdict::Pass) << name;
    }
}

TEST(Closure, RoundTripRepassesTheSuite)
{
    auto rep = run_closure(load("a3.json"));
    ASSERT_TRUE(rep.closure && rep.closure->algebra);
    const std::string text = emit_algebra_json(*rep.closure->algebra);
    auto back = parse_algebra_json(text);
    EXPECT_EQ(back.algebra.y, fx::a3().y);
    auto again = run_suite(back, "all");
    EXPECT_EQ(again.exit_code(), 0);
    EXPECT_EQ(again.count(RecordVerdict::Inconclusive), 0u);
    auto twice = *run_closure(back).closure->algebra;
    EXPECT_EQ(twice.name, "a3-closure-closure");
    twice.name = back.name;
    EXPECT_EQ(emit_algebra_json(twice), text);
}

TEST(Closure, ExhaustedRangeIsReportedNotFailed)
{
    AlgebraFile f = load("a3.json");
    Matrix A(3, 3);
    A(0, 2) = 1;
    f.operators->ops = {VertexOperator::polynomial(3, {{-1, A}})};
    auto rep = run_closure(f);
    EXPECT_EQ(rep.closure->status, "IndexRangeExhausted");
    EXPECT_EQ(rep.exit_code(), 0);
    EXPECT_EQ(rep.records[0].verdict, RecordVerdict::Inconclusive);
}
