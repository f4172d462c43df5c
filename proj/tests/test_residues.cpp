#include <gtest/gtest.h>

#include <amz/json_io.hpp>
#include <amz/padic_oracle.hpp>
#include <amz/reference.hpp>
#include <amz/residues.hpp>

#include "gen.hpp"

using namespace amz;

namespace
{

ResidueData residue(const Arrangement &A) { return b_prime(A, FlatLattice(A)); }

} // namespace

TEST(BmuTest, Origins)
{
    for (int n = 2; n <= 6; ++n) {
        Arrangement A = n_origins(static_cast<std::size_t>(n));
        RationalUni b = b_mu(A, FlatLattice(A));
        EXPECT_TRUE(b == reference::origins_bmu(n)) << b.to_string();
        // 1 + (q - 1)/(q (q^{n-1} - 1))
        RationalUni alt = RationalUni::constant(1, 'q') +
                          RationalUni(LaurentPoly::from_ints('q', 0, {-1, 1}),
                                      LaurentPoly::from_ints('q', 1, {-1}) + LaurentPoly::monomial(1, n, 'q'));
        EXPECT_TRUE(b == alt);
    }
    Arrangement two = n_origins(2);
    EXPECT_EQ(b_mu(two, FlatLattice(two)).eval(Rational(5)), Rational(6, 5));
}

TEST(BmuTest, Triangle)
{
    Arrangement A = reference::triangle();
    RationalUni b = b_mu(A, FlatLattice(A));
    EXPECT_TRUE(b == RationalUni(LaurentPoly::from_ints('q', -2, {1, 4, 1})));
    EXPECT_EQ(b.eval(Rational(5)), Rational(46, 25));
}

TEST(BmuTest, PublishedValues)
{
    Arrangement D = reference::triangle_doubled();
    EXPECT_TRUE(b_mu(D, FlatLattice(D)) == reference::doubled_bmu());
    Arrangement H = reference::six_normals();
    EXPECT_TRUE(b_mu(H, FlatLattice(H)) == reference::six_normals_bmu());
}

TEST(BmuTest, RequiresColoopFree)
{
    Arrangement A = n_origins(1);
    EXPECT_THROW(b_mu(A, FlatLattice(A)), precondition_error);
    Arrangement B = Arrangement::from_ints(2, {{1, 0}, {0, 1}, {0, 1}});
    EXPECT_THROW(b_mu(B, FlatLattice(B)), precondition_error);
}

TEST(BprimeTest, Values)
{
    EXPECT_EQ(residue(reference::triangle()).B_prime, reference::eulerian(3));
    EXPECT_EQ(residue(graphic_arrangement(reference::atilde(3))).B_prime, reference::eulerian(4));
    EXPECT_EQ(residue(graphic_arrangement(reference::atilde(4))).B_prime, reference::eulerian(5));
    EXPECT_EQ(residue(reference::triangle_doubled()).B_prime, reference::doubled_numerator());
    ResidueData h = residue(reference::six_normals());
    EXPECT_EQ(h.B_prime, reference::six_normals_numerator());
    EXPECT_TRUE(h.palindromic);
    EXPECT_TRUE(h.positive_coeffs);
    EXPECT_EQ(h.degree, 10);
}

TEST(BprimeTest, OriginsAreGeometricSums)
{
    for (int n = 2; n <= 5; ++n) {
        ResidueData d = residue(n_origins(static_cast<std::size_t>(n)));
        LaurentPoly want('q');
        for (int i = 0; i < n; ++i) {
            want += LaurentPoly::monomial(1, i, 'q');
        }
        EXPECT_EQ(d.B_prime, want);
    }
}

TEST(BprimeTest, ActualAndFormulaDegree)
{
    ResidueData t = residue(reference::triangle());
    EXPECT_EQ(t.degree, 2);
    EXPECT_EQ(t.formula_degree, 4);
}

TEST(EpsilonTest, ChainLengths)
{
    FlatLattice lat(reference::six_normals());
    auto l = epsilon_chain_lengths(lat);
    EXPECT_EQ(l.at(-6), 2);
    EXPECT_EQ(l.at(-5), 0);
    EXPECT_EQ(l.at(-3), 0);
}

TEST(ResidueProperty, LatticeFormulaMatchesResidue)
{
    std::vector<Arrangement> arrs{n_origins(2), reference::triangle(), reference::triangle_doubled(),
                                  reference::six_normals()};
    for (const auto &A : gen::arrangements(20, true)) {
        arrs.push_back(A);
    }
    for (const auto &A : arrs) {
        FlatLattice lat(A);
        RationalUni b = b_mu(A, lat);
        EXPECT_TRUE(b == b_mu_via_residue(igusa_chain(A, lat), static_cast<int>(A.m()))) << to_json(A).dump();
        ResidueData d = b_prime(A, lat);
        EXPECT_TRUE(d.palindromic);
        EXPECT_LE(d.degree, d.formula_degree);
        EXPECT_EQ(d.B_prime.coeff(0), 1);
    }
}

TEST(ResidueProperty, LimitOfNormalizedCounts)
{
    // the normalized counts approach B_mu(p) from below on these cases
    for (const auto &A : {n_origins(2), reference::triangle()}) {
        FlatLattice lat(A);
        LimitProbe pr = limit_probe(A, lat, 5, 3);
        ASSERT_TRUE(pr.coloop_free);
        EXPECT_TRUE(pr.increasing);
        for (std::size_t i = 1; i < pr.distance.size(); ++i) {
            EXPECT_LT(pr.distance[i], pr.distance[i - 1]);
        }
    }
}

TEST(ResidueProperty, GeneratorGivesColoopFree)
{
    for (const auto &A : gen::arrangements(30, true)) {
        EXPECT_TRUE(structural_flags(A).coloop_free);
    }
}
