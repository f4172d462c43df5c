#include <gtest/gtest.h>

#include <amz/json_io.hpp>
#include <amz/quiver_varieties.hpp>

#include "oracles.hpp"

using namespace amz;

namespace
{

// Gaussian binomial [w choose v] in L.
LaurentPoly gaussian(int w, int v)
{
    if (v < 0 || v > w) {
        return LaurentPoly('L');
    }
    RationalUni r = RationalUni::constant(1, 'L');
    for (int i = 0; i < v; ++i) {
        r *= RationalUni(LaurentPoly::monomial(1, w - i, 'L') - LaurentPoly::constant(1, 'L'),
                         LaurentPoly::monomial(1, i + 1, 'L') - LaurentPoly::constant(1, 'L'));
    }
    return r.as_laurent();
}

} // namespace

TEST(PartitionTest, Counts)
{
    EXPECT_EQ(partitions_of(0).size(), 1U);
    EXPECT_EQ(partitions_of(5).size(), 7U);
    EXPECT_EQ(partitions_of(10).size(), 42U);
    for (const auto &p : partitions_of(6)) {
        EXPECT_EQ(p.size(), 6);
    }
    EXPECT_THROW(Partition({1, 2}), precondition_error);
}

TEST(PartitionTest, InnerProduct)
{
    Partition a({2, 1});
    Partition b({1, 1, 1});
    // min(2,1)*1*3 + min(1,1)*1*3
    EXPECT_EQ(partition_inner(a, b), 6);
    EXPECT_EQ(partition_inner(a, a), 2 + 1 + 1 + 1);
    EXPECT_EQ(partition_inner(Partition::ones(3), Partition({3})), 3);
    EXPECT_EQ(partition_inner(Partition(), a), 0);
}

TEST(NakajimaTest, JordanQuiverMatchesProductFormula)
{
    auto gf = nakajima_gf(jordan_quiver(), {1}, 5);
    auto want = oracle::gottsche(5);
    for (int k = 0; k <= 5; ++k) {
        RationalUni c = gf.series.coeff({k});
        ASSERT_TRUE(c.is_laurent());
        EXPECT_EQ(c.num(), want[static_cast<std::size_t>(k)]) << "T^" << k;
        EXPECT_EQ(gf.classes.at({k}), want[static_cast<std::size_t>(k)].shifted(k));
    }
    EXPECT_EQ(gf.classes.at({1}), LaurentPoly::monomial(1, 2, 'L'));
    EXPECT_EQ(gf.classes.at({2}), LaurentPoly::from_ints('L', 3, {1, 1}));
}

TEST(NakajimaTest, SingleVertexGivesCotangentGrassmannians)
{
    Quiver g(1, {});
    for (int w = 1; w <= 3; ++w) {
        auto gf = nakajima_gf(g, {w}, 4);
        for (int v = 0; v <= 4; ++v) {
            LaurentPoly want = gaussian(w, v);
            if (!want.is_zero()) {
                want = want.shifted(v * (w - v));
            }
            EXPECT_EQ(gf.classes.at({v}), want) << "w=" << w << " v=" << v;
        }
    }
}

TEST(NakajimaTest, TwoVertexChainIsPolynomialWithTopCoefficientOne)
{
    Quiver g(2, {{0, 1}});
    auto gf = nakajima_gf(g, {1, 1}, 3);
    for (const auto &[v, c] : gf.classes) {
        if (c.is_zero()) {
            continue;
        }
        EXPECT_TRUE(c.is_polynomial());
        EXPECT_EQ(c.coeff(c.degree()), 1);
        for (const auto &[e, x] : c.terms()) {
            EXPECT_GT(x, 0);
        }
        EXPECT_EQ(c.degree(), -2 * d_vw(g, v, {1, 1}));
    }
}

TEST(NakajimaTest, Preconditions)
{
    EXPECT_THROW(nakajima_gf(jordan_quiver(), {1, 1}, 2), precondition_error);
    EXPECT_THROW(nakajima_gf(jordan_quiver(), {-1}, 2), precondition_error);
    EXPECT_THROW(nakajima_gf(jordan_quiver(), {1}, -1), precondition_error);
}

TEST(QuiverJsonTest, RoundTrip)
{
    Quiver g = quiver_from_json(read_json_file(std::string(AMZ_DATA_DIR) + "/atilde2_doubled.json"));
    EXPECT_EQ(g.vertices, 3);
    EXPECT_EQ(g.edges.size(), 4U);
    Quiver h = quiver_from_json(parse_json_text(to_json(g).dump()));
    EXPECT_EQ(h.edges, g.edges);
    EXPECT_THROW(quiver_from_json(parse_json_text("{\"vertices\": 2, \"edges\": [[0, 1]]}")), parse_error);
    EXPECT_THROW(quiver_from_json(parse_json_text("{\"vertices\": 2}")), parse_error);
}
