#include <gtest/gtest.h>

#include <amz/hypertoric.hpp>
#include <amz/json_io.hpp>
#include <amz/reference.hpp>

#include "gen.hpp"
#include "oracles.hpp"

using namespace amz;

namespace
{

LaurentPoly origins_class(int n)
{
    LaurentPoly c('L');
    for (int i = 0; i < n; ++i) {
        c += LaurentPoly::monomial(1, n - 1 + i, 'L');
    }
    return c;
}

std::vector<long> as_long(const std::vector<std::int64_t> &v) { return {v.begin(), v.end()}; }

} // namespace

TEST(HypertoricTest, Origins)
{
    for (int n = 1; n <= 5; ++n) {
        Arrangement A = n_origins(static_cast<std::size_t>(n));
        auto h = hypertoric_class(A, FlatLattice(A));
        EXPECT_EQ(h.cls, origins_class(n));
        EXPECT_TRUE(h.unimodular);
        EXPECT_EQ(h.cls.eval(Rational(1)), n);
    }
}

TEST(HypertoricTest, Triangle)
{
    Arrangement A = reference::triangle();
    EXPECT_EQ(hypertoric_class(A, FlatLattice(A)).cls, LaurentPoly::from_ints('L', 1, {2, 1}));
}

TEST(HypertoricTest, NonUnimodularIsFlagged)
{
    Arrangement A = Arrangement::from_ints(1, {{1}, {2}});
    auto h = hypertoric_class(A, FlatLattice(A));
    EXPECT_FALSE(h.unimodular);
    EXPECT_TRUE(h.formal);
}

TEST(HypertoricTest, RequiresEssential)
{
    Arrangement A = Arrangement::from_ints(2, {{1, 0}});
    EXPECT_THROW(hypertoric_class(A, FlatLattice(A)), precondition_error);
}

TEST(HypertoricTest, EPolynomial)
{
    EXPECT_EQ(e_polynomial(origins_class(3)), origins_class(3).with_var('u'));
}

TEST(FiberTest, MethodsAgreeWithRawCount)
{
    std::vector<Arrangement> arrs{n_origins(1), n_origins(2), n_origins(3), reference::triangle()};
    for (std::int64_t p : {5, 7}) {
        for (const auto &A : arrs) {
            FlatLattice lat(A);
            auto xi = find_generic_xi(A, lat, p);
            ASSERT_TRUE(xi.has_value());
            BigInt direct = count_moment_fiber(A, lat, p, *xi, FiberMethod::direct);
            BigInt conv = count_moment_fiber(A, lat, p, *xi, FiberMethod::convolution);
            EXPECT_EQ(direct, conv);
            EXPECT_EQ(direct, oracle::raw_solutions(A, p, 1, as_long(*xi)));
            Rational want = hypertoric_class(A, lat).cls.eval(Rational(p)) *
                            rational_pow(Rational(p - 1), static_cast<long>(A.m()));
            EXPECT_EQ(Rational(direct), want) << to_json(A).dump() << " p=" << p;
        }
    }
}

TEST(FiberTest, TriangleAtFive)
{
    Arrangement A = reference::triangle();
    FlatLattice lat(A);
    auto xi = find_generic_xi(A, lat, 5);
    ASSERT_TRUE(xi.has_value());
    EXPECT_EQ(count_moment_fiber(A, lat, 5, *xi), 560);
}

TEST(FiberTest, RejectsNonGenericValue)
{
    Arrangement A = reference::triangle();
    FlatLattice lat(A);
    EXPECT_FALSE(is_generic_xi(A, lat, 5, {0, 0}));
    EXPECT_FALSE(is_generic_xi(A, lat, 5, {1, 0}));
    EXPECT_THROW(count_moment_fiber(A, lat, 5, {0, 0}), precondition_error);
    EXPECT_THROW(count_moment_fiber(A, lat, 4, {1, 2}), precondition_error);
}

TEST(HypertoricProperty, UnimodularClassMatchesFiberCount)
{
    int checked = 0;
    for (const auto &A : gen::arrangements(80)) {
        FlatLattice lat(A);
        auto h = hypertoric_class(A, lat);
        if (!h.unimodular || A.n() > 4) {
            continue;
        }
        EXPECT_TRUE(h.cls.is_polynomial());
        auto xi = find_generic_xi(A, lat, 5);
        ASSERT_TRUE(xi.has_value());
        Rational want = h.cls.eval(Rational(5)) * rational_pow(Rational(4), static_cast<long>(A.m()));
        EXPECT_EQ(Rational(count_moment_fiber(A, lat, 5, *xi)), want) << to_json(A).dump();
        ++checked;
    }
    EXPECT_GT(checked, 5);
}

TEST(HypertoricProperty, DegreeIsHalfDimension)
{
    for (const auto &A : gen::arrangements(20)) {
        auto h = hypertoric_class(A, FlatLattice(A));
        if (A.n() >= A.m()) {
            EXPECT_TRUE(h.cls.is_polynomial());
        }
        EXPECT_EQ(h.cls.degree(), static_cast<int>(2 * (A.n() - A.m())));
        EXPECT_EQ(h.cls.coeff(h.cls.degree()), 1);
    }
}
