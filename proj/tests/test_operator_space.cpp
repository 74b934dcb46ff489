#include "support.hpp"

#include "vtxalg/errors.hpp"
#include "vtxalg/operator_space.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vtx;
using fx::vec;

namespace {

Matrix mat(std::size_t n, std::initializer_list<long> xs)
{
    Matrix m(n, n);
    std::size_t k = 0;
    for (long x : xs) {
        m(k / n, k % n) = x;
        ++k;
    }
    return m;
}

Matrix unit(std::size_t n, std::size_t i, std::size_t j)
{
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
}

VertexOperator random_operator(std::mt19937 &rng, std::size_t n, int lo, int hi)
{
    std::uniform_int_distribution<int> c(-2, 2);
    std::map<int, Matrix> t;
    for (int e = lo; e <= hi; ++e) {
        Matrix m(n, n);
        for (auto &x : m.data())
            x = c(rng);
        t.emplace(e, m);
    }
    return VertexOperator::polynomial(n, t);
}

} // namespace

TEST(VertexOperator, ModesAndDerivative)
{
    auto a = VertexOperator::polynomial(2, {{-1, unit(2, 0, 1)}, {2, unit(2, 1, 0)}});
    EXPECT_EQ(a.mode(0), unit(2, 0, 1));
    EXPECT_EQ(a.mode(-3), unit(2, 1, 0));
    auto d = derivative(a);
    EXPECT_EQ(d.coefficient(-2), Rational(-1) * unit(2, 0, 1));
    EXPECT_EQ(d.coefficient(1), Rational(2) * unit(2, 1, 0));
}

TEST(VertexOperator, CompatibleAtOrderZero)
{
    std::mt19937 rng(3);
    auto a = random_operator(rng, 2, -2, 2), b = random_operator(rng, 2, -1, 3);
    auto r = find_compat_order({a, b, a}, 4);
    EXPECT_TRUE(r.found());
    EXPECT_EQ(r.order, 0);
    EXPECT_TRUE(r.exact_complete);
}

TEST(NthProduct, ExactFormulaMatchesResidueDefinition)
{
    std::mt19937 rng(11);
    const Window w = Window::cube({"x1", "x"}, -14, 14);
    for (int trial = 0; trial < 6; ++trial) {
        auto a = random_operator(rng, 2, -2, 1);
        auto b = random_operator(rng, 2, -1, 2);
        for (int n = -4; n <= 2; ++n) {
            auto exact = nth_product(a, b, n);
            auto viaw = nth_product_window(a, b, n, w);
            auto c = window_equal(exact.as_distribution("x"), viaw);
            EXPECT_TRUE(c.equal()) << "trial " << trial << " n " << n;
        }
    }
}

TEST(NthProduct, VanishesFromCompatibilityOrder)
{
    std::mt19937 rng(5);
    auto a = random_operator(rng, 3, -2, 2), b = random_operator(rng, 3, -2, 2);
    for (int n = 0; n < 4; ++n)
        EXPECT_TRUE(nth_product(a, b, n).terms().empty());
}

TEST(NthProduct, NonnegativeFactorVanishesBelowDegree)
{
    std::mt19937 rng(6);
    auto a = random_operator(rng, 2, 0, 2), b = random_operator(rng, 2, -3, 2);
    EXPECT_FALSE(nth_product(a, b, -3).terms().empty());
    for (int n = -8; n < -3; ++n)
        EXPECT_TRUE(nth_product(a, b, n).terms().empty());
}

TEST(NthProduct, IdentityActsAsUnit)
{
    std::mt19937 rng(8);
    auto a = random_operator(rng, 2, -1, 2);
    auto one = VertexOperator::identity(2);
    EXPECT_EQ(nth_product(one, a, -1), a);
    EXPECT_EQ(nth_product(a, one, -1), a);
    EXPECT_EQ(nth_product(a, one, -2), derivative(a));
}

TEST(NthProduct, LocalVariantDiffersOnNoncommutingPair)
{
    // a = A x^{-1}, b = B with AB != BA.
    const Matrix A = unit(2, 0, 1), B = unit(2, 1, 0);
    auto a = VertexOperator::polynomial(2, {{-1, A}});
    auto b = VertexOperator::polynomial(2, {{0, B}});
    for (int n = -3; n <= 2; ++n) {
        const Rational s = (n % 2) ? -1 : 1;
        Matrix local = n >= 0 ? A * B - B * A : Rational(-1) * (B * A);
        auto expected_local = VertexOperator::polynomial(2, {{n, s * local}});
        auto expected = n < 0 ? VertexOperator::polynomial(2, {{n, Rational(-1) * s * (A * B)}})
                              : VertexOperator::polynomial(2, {});
        EXPECT_EQ(nth_product_local(a, b, n), expected_local) << n;
        EXPECT_EQ(nth_product(a, b, n), expected) << n;
    }
}

TEST(NthProduct, LocalVariantAgreesWhenOperatorsCommute)
{
    auto a = VertexOperator::polynomial(2, {{0, mat(2, {1, 2, 0, 1})}, {1, mat(2, {0, 1, 0, 0})}});
    auto b = VertexOperator::polynomial(2, {{0, mat(2, {3, 0, 0, 3})}, {2, mat(2, {0, 5, 0, 0})}});
    for (int n = -5; n <= 2; ++n)
        EXPECT_EQ(nth_product_local(a, b, n), nth_product(a, b, n)) << n;
}

TEST(TruncatedT, IndependentOfAdmissibleK)
{
    std::mt19937 rng(21);
    auto a = random_operator(rng, 2, -1, 1), b = random_operator(rng, 2, -2, 1);
    const Window w = Window::cube({"x", "y"}, -10, 10);
    auto t0 = truncated_T(a, b, 0, w);
    for (int k = 1; k <= 3; ++k)
        EXPECT_TRUE(window_equal(t0, truncated_T(a, b, k, w)).equal()) << k;
}

TEST(Bridge, ModuleOperatorsRealiseTheAlgebraProducts)
{
    for (const auto &alg : {fx::a3(), fx::ut2(), fx::a2()})
        EXPECT_TRUE(check_product_bridge(alg, adjoint_module(alg)).passed());
    auto m = wn_module(fx::a3(), adjoint_module(fx::a3()), 2);
    EXPECT_TRUE(check_product_bridge(matrix_algebra(fx::a3(), 2), m).passed());
}

TEST(Bridge, CorruptedModuleFails)
{
    auto alg = fx::a3();
    auto mod = adjoint_module(alg);
    mod.y.set(1, 1, -1, vec({0, 1, 0}));
    EXPECT_EQ(check_product_bridge(alg, mod).verdict, Verdict::Fail);
}

TEST(PropAssoc, ModuleOperatorsAreAssociative)
{
    auto alg = fx::a3();
    auto mod = adjoint_module(alg);
    for (std::size_t u = 0; u < 3; ++u)
        for (std::size_t v = 0; v < 3; ++v)
            for (std::size_t w = 0; w < 3; ++w) {
                auto r = check_prop_assoc(module_operator(mod, alg.e(u)),
                                          module_operator(mod, alg.e(v)), alg.e(w), 6);
                EXPECT_TRUE(r.passed()) << u << v << w << ' ' << r.note
                                             << (r.witnesses.empty() ? std::string() : r.witnesses[0].note);
                EXPECT_TRUE(r.exact_complete);
            }
}

TEST(Closure, SingleOperatorOnA3ReproducesTheTable)
{
    auto alg = fx::a3();
    auto mod = adjoint_module(alg);
    auto cr = closure({module_operator(mod, alg.e(1))}, 3);
    ASSERT_EQ(cr.status, ClosureResult::Status::Closed) << cr.note;
    ASSERT_EQ(cr.basis.size(), 3u);
    EXPECT_EQ(cr.basis[1], module_operator(mod, alg.e(1)));
    EXPECT_EQ(cr.basis[2], module_operator(mod, alg.e(2)));
    EXPECT_EQ(cr.n_range, std::make_pair(-4, 0));
    ASSERT_TRUE(cr.structure);
    EXPECT_EQ(cr.structure->y, alg.y);
    EXPECT_TRUE(validate_structure(*cr.structure).passed());
    EXPECT_TRUE(verify_module_structure(cr).passed());
}

TEST(Closure, ConstantMatricesGiveTheirAssociativeSpan)
{
    auto alg = fx::ut2();
    auto mod = adjoint_module(alg);
    auto cr = closure({module_operator(mod, alg.e(1)), module_operator(mod, alg.e(2))}, 3);
    ASSERT_EQ(cr.status, ClosureResult::Status::Closed);
    EXPECT_EQ(cr.basis.size(), 3u);
    ASSERT_TRUE(cr.structure);
    EXPECT_TRUE(verify_module_structure(cr).passed());
}

TEST(Closure, NegativePowersExhaustTheIndexRange)
{
    auto a = VertexOperator::polynomial(2, {{-1, unit(2, 0, 1)}});
    auto cr = closure({a}, 2);
    EXPECT_EQ(cr.status, ClosureResult::Status::IndexRangeExhausted);
    EXPECT_FALSE(cr.structure);
}

TEST(Closure, CapIsReported)
{
    auto alg = fx::a3();
    auto mod = adjoint_module(alg);
    ClosureOptions o;
    o.dim_cap = 2;
    auto cr = closure({module_operator(mod, alg.e(1))}, 3, o);
    EXPECT_EQ(cr.status, ClosureResult::Status::CapExceeded);
}

TEST(Closure, CorruptedStructureFailsVerification)
{
    auto alg = fx::a3();
    auto mod = adjoint_module(alg);
    auto cr = closure({module_operator(mod, alg.e(1))}, 3);
    ASSERT_TRUE(cr.structure);
    cr.structure->y.set(1, 1, -1, vec({0, 1, 0}));
    EXPECT_EQ(verify_module_structure(cr).verdict, Verdict::Fail);
}

TEST(Closure, RejectsWrongDimension)
{
    auto a = VertexOperator::identity(2);
    EXPECT_THROW(closure({a}, 3), NotCompatible);
}
