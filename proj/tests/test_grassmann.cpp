#include <gtest/gtest.h>

#include "support.hpp"

using namespace cactus;
using namespace cactus::testing;

namespace {

// Y network at a=1, b=2, c=3 (a+b+c = 6).
RationalMatrix example_x() {
    return mat({{0, 6, 0, -6, 0, 6}, {1, q(1, 3), 0, 0, 0, q(-1, 2)}, {0, q(-1, 3), -1, -1, 0, 0}, {0, 0, 0, 1, 1, q(1, 2)}});
}

RationalMatrix example_x_tilde() {
    return mat({{6, 0, -6, 0, 6, 0}, {1, 1, q(1, 2), 0, 0, 0}, {0, 0, q(-1, 2), -1, q(-1, 3), 0}, {-1, 0, 0, 0, q(1, 3), 1}});
}

const RationalMatrix kYResponse = mat({{q(-5, 6), q(1, 3), q(1, 2)}, {q(1, 3), q(-4, 3), 1}, {q(1, 2), 1, q(-3, 2)}});
const RationalMatrix kYLStar = mat({{q(-3, 2), q(1, 2), 1}, {q(1, 2), q(-5, 6), q(1, 3)}, {1, q(1, 3), q(-4, 3)}});

ExteriorVector y_image() { return lam_map(lambda_vector(y_network(1, 2, 3))); }

}  // namespace

TEST(Forms, KernelsAndConjugation) {
    for (int n = 2; n <= 5; ++n) {
        const auto w = omega(n).gram;
        const auto wd = omega_d(n).gram;
        const auto D = d_matrix(n);
        EXPECT_EQ(D * D, RationalMatrix::identity(static_cast<std::size_t>(2 * n)));
        EXPECT_EQ(D * w * D, wd);
        EXPECT_EQ(w.transpose(), -w);
        EXPECT_EQ(rank(w), static_cast<std::size_t>(2 * n - 2));
        RationalVector alt_tilde(static_cast<std::size_t>(2 * n)), alt_plain(static_cast<std::size_t>(2 * n));
        RationalVector ones_plain(static_cast<std::size_t>(2 * n)), ones_tilde(static_cast<std::size_t>(2 * n));
        for (int i = 1; i <= n; ++i) {
            const Rational s = i % 2 == 1 ? 1 : -1;
            alt_tilde[static_cast<std::size_t>(tilde_pos(i))] = s;
            alt_plain[static_cast<std::size_t>(plain_pos(i))] = s;
            ones_plain[static_cast<std::size_t>(plain_pos(i))] = 1;
            ones_tilde[static_cast<std::size_t>(tilde_pos(i))] = 1;
        }
        const RationalVector zero(static_cast<std::size_t>(2 * n));
        EXPECT_EQ(w * alt_tilde, zero);
        EXPECT_EQ(w * alt_plain, zero);
        EXPECT_EQ(wd * ones_plain, zero);
        EXPECT_EQ(wd * ones_tilde, zero);
    }
}

TEST(Forms, TwoTerminalEntries) {
    // n = 2: x1 y1~ - x1~ y1 + x2 y2~ - x2~ y2 + x2 y1~ - x1~ y2 + x1 y2~ - x2~ y1.
    const auto w = omega(2).gram;
    EXPECT_EQ(w, mat({{0, 1, 0, 1}, {-1, 0, -1, 0}, {0, 1, 0, 1}, {-1, 0, -1, 0}}));
}

TEST(LamMap, BasisVectors) {
    const auto f2 = f_sigma(NoncrossingPartition::singletons(2));
    ExteriorVector expected(2, 3);
    expected.add(index_set({1, 2}, {1}), 1);
    expected.add(index_set({1, 2}, {2}), 1);
    EXPECT_EQ(f2, expected);

    const auto f3 = f_sigma(NoncrossingPartition::single_block(3));
    ExteriorVector e3(3, 4);
    for (int i = 1; i <= 3; ++i) e3.add(index_set({i}, {1, 2, 3}), 1);
    EXPECT_EQ(f3, e3);
}

TEST(LamMap, YNetwork123Coordinates) {
    const auto p = y_image();
    for (int i = 1; i <= 3; ++i) {
        EXPECT_EQ(p[index_set({i}, {1, 2, 3})], 6);
        EXPECT_EQ(p[index_set({1, 2, 3}, {i})], 6);
    }
    EXPECT_EQ(p[index_set({1, 2}, {1, 2})], 6);
    EXPECT_EQ(p[index_set({1, 3}, {2, 3})], 6);
    EXPECT_EQ(p[index_set({1, 2}, {2, 3})], 9);
}

TEST(LamMap, MatchesConcordanceSumsOnRandomNetworks) {
    std::mt19937 rng(44);
    for (int it = 0; it < 24; ++it) {
        const int n = 2 + it % 3;
        const auto lam = lambda_vector(random_network(rng, {n, 2 + it % 7, it % 2 == 0, 0.3}));
        const auto p = lam_map(lam);
        for (IndexSet s : subsets_of_size(2 * n, n + 1)) EXPECT_EQ(p[s], brute_delta(lam, s));
    }
}

TEST(LamMap, LinearAndZero) {
    GroveMeasurements zero(3);
    EXPECT_TRUE(lam_map(zero).is_zero());
    const auto parts = enumerate_noncrossing(3);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        GroveMeasurements unit(3);
        unit.at(k) = 1;
        EXPECT_EQ(lam_map(unit), f_sigma(parts[k]));
    }
}

TEST(LamMap, BasisVectorsAreWedgesOfBlockVectors) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& s : enumerate_noncrossing(n)) {
            const auto w = wedge_rows(block_vectors(s));
            const auto f = f_sigma(s);
            EXPECT_TRUE(f == w || f == Rational(-1) * w) << s.key();
        }
}

TEST(Plucker, YNetwork123Representatives) {
    const auto p = y_image();
    const auto px = plucker(example_x());
    const auto pxt = plucker(example_x_tilde());
    EXPECT_TRUE(proportional(px, p));
    EXPECT_TRUE(proportional(pxt, p));
    EXPECT_TRUE(px == pxt || px == Rational(-1) * pxt || proportional(px, pxt));
    EXPECT_TRUE(is_totally_nonnegative(px));
}

TEST(Plucker, IdentityBlockHasOneCoordinate) {
    RationalMatrix m(3, 4);
    m(0, 0) = m(1, 1) = m(2, 2) = 1;
    const auto p = plucker(m);
    EXPECT_EQ(p.coords().size(), 1u);
    EXPECT_EQ(p[index_set({1, 2}, {1})], 1);
    EXPECT_THROW(plucker(RationalMatrix(3, 4)), PreconditionError);
}

TEST(Plucker, RepresentativeRoundTrip) {
    std::mt19937 rng(45);
    for (int it = 0; it < 20; ++it) {
        const auto p = lam_map(lambda_vector(random_network(rng, {2 + it % 3, 2 + it % 6, it % 2 == 0, 0.3})));
        const auto rep = representative_from_plucker(p);
        EXPECT_TRUE(proportional(plucker(rep), p));
    }
}

TEST(Isotropy, YNetwork123Representatives) {
    const auto D = d_matrix(3);
    EXPECT_TRUE(is_isotropic(example_x(), omega(3)));
    EXPECT_TRUE(is_isotropic(example_x_tilde(), omega(3)));
    EXPECT_TRUE(is_isotropic(example_x() * D, omega_d(3)));
    EXPECT_TRUE(is_isotropic(example_x_tilde() * D, omega_d(3)));
    EXPECT_FALSE(is_isotropic(example_x() * D, omega(3)));
}

TEST(Kappa, NonIsotropicBasisWedge) {
    ExteriorVector v(2, 3);
    v.add(index_set({1, 2}, {1}), 1);
    EXPECT_FALSE(kappa(omega(2), v).is_zero());
}

TEST(Kappa, Linear) {
    std::mt19937 rng(46);
    std::uniform_int_distribution<int> d(-3, 3);
    const auto sets = subsets_of_size(8, 5);
    for (int it = 0; it < 10; ++it) {
        ExteriorVector u(4, 5), v(4, 5);
        for (IndexSet s : sets) {
            u.add(s, d(rng));
            v.add(s, d(rng));
        }
        EXPECT_EQ(kappa(omega(4), u + v), kappa(omega(4), u) + kappa(omega(4), v));
        EXPECT_EQ(kappa(omega(4), Rational(3) * u), Rational(3) * kappa(omega(4), u));
    }
}

TEST(Kappa, VanishesOnImagesAndPointsAreNonnegative) {
    for (const auto& name : fixture_names()) {
        const auto net = fixture(name);
        const auto p = lam_map(lambda_vector(net));
        EXPECT_TRUE(kappa(omega(net.n), p).is_zero()) << name;
        EXPECT_TRUE(is_totally_nonnegative(p)) << name;
    }
    std::mt19937 rng(47);
    for (int it = 0; it < 30; ++it) {
        const int n = 2 + it % 3;
        const auto p = lam_map(lambda_vector(random_network(rng, {n, 1 + it % 9, it % 2 == 0, 0.35})));
        EXPECT_TRUE(kappa(omega(n), p).is_zero());
        EXPECT_TRUE(is_totally_nonnegative(p));
    }
}

TEST(Kappa, KernelDimensionIsCatalan) {
    EXPECT_EQ(kernel_dimension_of_kappa(2), 2);
    EXPECT_EQ(kernel_dimension_of_kappa(3), 5);
    EXPECT_EQ(kernel_dimension_of_kappa(4), 14);
}

TEST(Shift, OrderTwoNUpToSign) {
    for (int n = 2; n <= 4; ++n) {
        RationalMatrix s = RationalMatrix::identity(static_cast<std::size_t>(2 * n));
        for (int k = 0; k < 2 * n; ++k) s = s * shift(n);
        const auto id = RationalMatrix::identity(static_cast<std::size_t>(2 * n));
        EXPECT_TRUE(s == id || s == -id);
    }
    const auto M = example_x();
    RationalMatrix m = M;
    for (int k = 0; k < 6; ++k) m = cyclic_shift(m);
    const auto a = plucker(m), b = plucker(M);
    EXPECT_TRUE(a == b || a == Rational(-1) * b);
}

TEST(Shift, ExteriorActionMatchesMatrixAction) {
    std::mt19937 rng(48);
    for (int it = 0; it < 10; ++it) {
        const auto p = lam_map(lambda_vector(random_network(rng, {2 + it % 3, 2 + it % 6, it % 2 == 0, 0.3})));
        const auto rep = representative_from_plucker(p);
        EXPECT_EQ(plucker(cyclic_shift(rep)), shift_exterior(plucker(rep)));
    }
}

TEST(Shift, BasisVectorsGoToTheComplement) {
    for (int n = 2; n <= 4; ++n)
        for (const auto& s : enumerate_noncrossing(n)) {
            const auto shifted = shift_exterior(f_sigma(s));
            const auto target = f_sigma(kreweras_complement(s));
            EXPECT_TRUE(shifted == target || shifted == Rational(-1) * target) << s.key();
        }
}

TEST(Shift, DualityOnRandomNetworks) {
    std::mt19937 rng(49);
    for (int it = 0; it < 30; ++it) {
        const auto net = random_network(rng, {2 + it % 3, 2 + it % 7, it % 2 == 0, 0.35});
        const auto rep = representative_from_plucker(lam_map(lambda_vector(net)));
        EXPECT_TRUE(proportional(plucker(cyclic_shift(rep)), lam_map(lambda_vector(dual(net)))));
    }
}

TEST(Extreme, YNetwork123) {
    const auto e = extreme_coordinates(y_image());
    EXPECT_EQ(e.not_shorted, 6);
    EXPECT_EQ(e.connected, 6);
}

TEST(Extreme, ShortedAndDisconnected) {
    const auto shorted = extreme_coordinates(lam_map(lambda_vector(fixture("shorted.net"))));
    EXPECT_EQ(shorted.not_shorted, 0);
    EXPECT_NE(shorted.connected, 0);
    const auto disc = extreme_coordinates(lam_map(lambda_vector(fixture("disconnected.net"))));
    EXPECT_EQ(disc.connected, 0);
    EXPECT_NE(disc.not_shorted, 0);
}

TEST(Charts, YNetwork123Response) {
    const auto M = chart_from_response(kYResponse);
    EXPECT_TRUE(proportional(plucker(M), y_image()));
    EXPECT_TRUE(is_isotropic(M, omega(3)));
    EXPECT_EQ(extract_symmetric(M, Chart::NotShorted), kYResponse);
}

TEST(Charts, YNetwork123LStar) {
    const auto M = chart_from_lstar(kYLStar);
    EXPECT_TRUE(proportional(plucker(M), y_image()));
    EXPECT_TRUE(is_isotropic(M, omega(3)));
    EXPECT_EQ(extract_symmetric(M, Chart::Connected), kYLStar);
}

TEST(Charts, ExampleMatricesGiveResponseAndLStar) {
    EXPECT_EQ(extract_symmetric(example_x(), Chart::NotShorted), kYResponse);
    EXPECT_EQ(extract_symmetric(example_x_tilde(), Chart::Connected), kYLStar);
    EXPECT_EQ(extract_symmetric(example_x_tilde(), Chart::NotShorted), kYResponse);
    EXPECT_EQ(extract_symmetric(example_x(), Chart::Connected), kYLStar);
}

TEST(Charts, ExampleTSatisfiesDifferenceRelations) {
    const auto T = mat({{1, q(-1, 2), 0}, {0, q(1, 2), q(-1, 3)}, {-1, 0, q(1, 3)}});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(T(j, (i + 1) % 3) - T(j, i), kYLStar(i, j));
}

TEST(Charts, GaugeIndependence) {
    const auto S = mat({{q(1, 3), 0, q(-1, 2)}, {q(-1, 3), 1, 0}, {0, -1, q(1, 2)}});
    for (const Rational& shift_by : {q(0), q(5), q(-7, 3)}) {
        RationalMatrix P(4, 6);
        for (std::size_t k = 0; k < 3; ++k) P(0, 2 * k + 1) = 1;
        for (std::size_t j = 0; j < 3; ++j) {
            P(j + 1, 2 * j) = 1;
            for (std::size_t k = 0; k < 3; ++k) P(j + 1, 2 * k + 1) = S(j, k) + shift_by * Rational(static_cast<long long>(j) + 1);
        }
        EXPECT_EQ(extract_symmetric(P * d_matrix(3), Chart::NotShorted), kYResponse);
    }
}

TEST(Charts, ZeroMatrixIsTheEdgelessNetwork) {
    CactusNetwork empty;
    empty.n = 3;
    empty.shape = {{1}, {2}, {3}};
    EXPECT_TRUE(proportional(plucker(chart_from_response(RationalMatrix(3, 3))), lam_map(lambda_vector(empty))));
    // The dual of the edgeless network is the fully shorted one.
    CactusNetwork full;
    full.n = 3;
    full.shape = {{1, 2, 3}};
    EXPECT_TRUE(proportional(plucker(chart_from_lstar(RationalMatrix(3, 3))), lam_map(lambda_vector(full))));
}

TEST(Charts, RoundTripsOnRandomNetworks) {
    std::mt19937 rng(50);
    for (int it = 0; it < 40; ++it) {
        const int n = 2 + it % 3;
        const auto net = random_network(rng, {n, 2 + it % 8, it % 2 == 0, 0.35});
        const auto p = lam_map(lambda_vector(net));
        const auto rep = representative_from_plucker(p);
        if (net.partition().is_trivial()) {
            const auto L = response_matrix(net);
            const auto M = chart_from_response(L);
            EXPECT_TRUE(proportional(plucker(M), p));
            EXPECT_EQ(extract_symmetric(M, Chart::NotShorted), L);
            EXPECT_EQ(extract_symmetric(rep, Chart::NotShorted), L);
        } else {
            EXPECT_THROW(extract_symmetric(rep, Chart::NotShorted), PreconditionError);
        }
        if (connected(net)) {
            const auto Ls = lstar_from_resistance(resistance_matrix(net));
            const auto M = chart_from_lstar(Ls);
            EXPECT_TRUE(proportional(plucker(M), p));
            EXPECT_EQ(extract_symmetric(M, Chart::Connected), Ls);
            EXPECT_EQ(extract_symmetric(rep, Chart::Connected), Ls);
        } else {
            EXPECT_THROW(extract_symmetric(rep, Chart::Connected), PreconditionError);
        }
    }
}

TEST(Charts, RejectNonSymmetricInput) {
    EXPECT_THROW(chart_from_response(mat({{-1, 1}, {0, 0}})), InvalidInput);
    EXPECT_THROW(chart_from_lstar(mat({{1, 1}, {1, 1}})), InvalidInput);
}
