#include <set>

#include <gtest/gtest.h>

#include <amz/format.hpp>
#include <amz/igusa.hpp>
#include <amz/json_io.hpp>
#include <amz/reference.hpp>

#include "gen.hpp"
#include "oracles.hpp"

using namespace amz;

namespace
{

std::vector<Arrangement> fixtures()
{
    return {n_origins(1), n_origins(2), n_origins(5), reference::triangle(), reference::triangle_doubled(),
            reference::six_normals(), graphic_arrangement(reference::atilde(3))};
}

const std::vector<std::pair<Rational, Rational>> kPoints{{Rational(5), Rational(1, 3)}, {Rational(7, 2), Rational(2, 9)},
                                                         {Rational(3), Rational(-1, 4)}};

} // namespace

TEST(IgusaTest, OriginsFamily)
{
    for (int n = 1; n <= 5; ++n) {
        Arrangement A = n_origins(static_cast<std::size_t>(n));
        BiRational z = igusa_chain(A, FlatLattice(A));
        EXPECT_TRUE(z == reference::origins_zeta(n)) << z.to_string();
        EXPECT_TRUE(z == igusa_recursion(A));
    }
}

TEST(IgusaTest, Triangle)
{
    Arrangement A = reference::triangle();
    BiRational z = igusa_chain(A, FlatLattice(A));
    EXPECT_TRUE(z == reference::triangle_zeta()) << z.to_string();
    EXPECT_FALSE(z == reference::triangle_zeta_as_printed());
    EXPECT_TRUE(z == reference::triangle_zeta_as_printed() * BiRational::monomial(1, 0, -1));
    EXPECT_EQ(z.multiplicity(2), 1);
    EXPECT_EQ(z.multiplicity(3), 2);
}

TEST(IgusaTest, SixNormals)
{
    Arrangement A = reference::six_normals();
    BiRational z = igusa_chain(A, FlatLattice(A));
    EXPECT_TRUE(z == reference::six_normals_zeta());
    EXPECT_EQ(z.den(), (BiRational::Den{{3, 1}, {5, 1}, {6, 3}}));
}

TEST(IgusaTest, RequiresEssential)
{
    Arrangement A = Arrangement::from_ints(2, {{1, 0}, {2, 0}});
    EXPECT_THROW(igusa_chain(A, FlatLattice(A)), precondition_error);
    EXPECT_THROW(igusa_recursion(A), precondition_error);
}

TEST(IgusaTest, ValueAtSZeroIsOne)
{
    // s = 0, i.e. t = 1, gives the volume of the polydisc
    for (const auto &A : fixtures()) {
        BiRational z = igusa_chain(A, FlatLattice(A));
        EXPECT_EQ(oracle::eval(z, Rational(5), Rational(1)), 1) << to_json(A).dump();
    }
}

TEST(IgusaTest, LatexOutput)
{
    Arrangement A = reference::triangle();
    std::string s = format_zeta(igusa_chain(A, FlatLattice(A)), Style::latex);
    EXPECT_NE(s.find("\\frac{(q - 1)^{2}q^{2s}"), std::string::npos) << s;
    EXPECT_NE(s.find("(q^{s+3} - 1)^{2}"), std::string::npos) << s;
    std::string o = format_zeta(reference::origins_zeta(2), Style::plain);
    EXPECT_EQ(o, "((q - 1)^2*q^(2s)*(q + 1))/((q^(s+1) - 1)*(q^(s+2) - 1))");
}

TEST(IgusaTest, JsonRoundTrip)
{
    for (const auto &A : fixtures()) {
        BiRational z = igusa_chain(A, FlatLattice(A));
        BiRational back = birational_from_json(parse_json_text(to_json(z).dump()));
        EXPECT_TRUE(back == z);
    }
}

TEST(IgusaProperty, ChainAgreesWithExplicitChainSum)
{
    auto arrs = fixtures();
    for (const auto &A : gen::arrangements(20)) {
        arrs.push_back(A);
    }
    for (const auto &A : arrs) {
        BiRational z = igusa_chain(A, FlatLattice(A));
        for (const auto &[q, t] : kPoints) {
            EXPECT_EQ(oracle::eval(z, q, t), oracle::chain_zeta(A, q, t)) << to_json(A).dump();
        }
    }
}

TEST(IgusaProperty, RecursionAndFunctionalEquation)
{
    auto arrs = fixtures();
    for (const auto &A : gen::arrangements(20)) {
        arrs.push_back(A);
    }
    for (const auto &A : arrs) {
        BiRational z = igusa_chain(A, FlatLattice(A));
        EXPECT_TRUE(z == igusa_recursion(A)) << to_json(A).dump();
        EXPECT_TRUE(functional_equation_check(z)) << to_json(A).dump();
        // the same identity checked numerically: Z(1/q, 1/t) = t^2 Z(q, t)
        Rational q(5), t(1, 3);
        EXPECT_EQ(oracle::eval(z, 1 / q, 1 / t), oracle::eval(z, q, t) * t * t);
    }
}

TEST(IgusaProperty, PolesComeFromDeltas)
{
    for (const auto &A : gen::arrangements(20)) {
        FlatLattice lat(A);
        BiRational z = igusa_chain(A, lat);
        std::set<int> deltas;
        for (std::size_t i = 0; i < lat.size(); ++i) {
            deltas.insert(lat.delta(i));
        }
        for (const auto &[a, k] : z.den()) {
            EXPECT_TRUE(deltas.count(a)) << a;
        }
    }
}

TEST(PoleTest, SixNormals)
{
    Arrangement A = reference::six_normals();
    FlatLattice lat(A);
    PoleReport r = pole_report(igusa_chain(A, lat), A, lat);
    const PoleInfo *p6 = r.find(-6);
    ASSERT_NE(p6, nullptr);
    EXPECT_EQ(p6->chain_length, 2);
    EXPECT_EQ(p6->actual_order, 3);
    EXPECT_EQ(p6->criterion, -3);
    const PoleInfo *p5 = r.find(-5);
    ASSERT_NE(p5, nullptr);
    EXPECT_EQ(p5->actual_order, 1);
    EXPECT_EQ(p5->criterion, -4);
    const PoleInfo *p3 = r.find(-3);
    ASSERT_NE(p3, nullptr);
    EXPECT_TRUE(p3->is_minus_m);
    EXPECT_EQ(p3->actual_order, 1);
}

TEST(PoleTest, TriangleAndOrigins)
{
    Arrangement A = reference::triangle();
    FlatLattice lat(A);
    PoleReport r = pole_report(igusa_chain(A, lat), A, lat);
    ASSERT_NE(r.find(-3), nullptr);
    EXPECT_EQ(r.find(-3)->actual_order, 2);
    EXPECT_EQ(r.find(-3)->predicted_order, 2);
    EXPECT_TRUE(r.find(-3)->is_minus_n);
    Arrangement B = n_origins(3);
    FlatLattice lb(B);
    PoleReport rb = pole_report(igusa_chain(B, lb), B, lb);
    EXPECT_EQ(rb.find(-1)->actual_order, 1);
    EXPECT_EQ(rb.find(-3)->actual_order, 1);
}

TEST(PoleProperty, OrdersWithinBounds)
{
    for (const auto &A : gen::arrangements(20)) {
        FlatLattice lat(A);
        PoleReport r = pole_report(igusa_chain(A, lat), A, lat);
        for (const auto &p : r.poles) {
            EXPECT_LE(p.actual_order, p.predicted_order);
            if (p.distinguished()) {
                EXPECT_EQ(p.actual_order, p.predicted_order);
            }
        }
    }
}
