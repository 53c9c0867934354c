#include <algorithm>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"

#include "spinrep/angular.hpp"
#include "spinrep/trep.hpp"

using namespace spinrep;

namespace {

constexpr double pi = std::numbers::pi;

Matrix named(NamedState kind, int n) {
    NamedStateSpec spec;
    spec.kind = kind;
    spec.spin = Spin(n);
    return named_state(spec);
}

void check_radii(const TRep& t, std::vector<double> expect, double tol = 1e-10) {
    const auto w = t.radii();
    REQUIRE(w.size() == expect.size());
    for (size_t k = 0; k < w.size(); ++k)
        CHECK(std::abs(w[k] - expect[k]) < tol);
}

void check_same_trep(const TRep& a, const TRep& b, double tol) {
    CHECK(a.spin.two_s() == b.spin.two_s());
    CHECK(std::abs(a.trace_component - b.trace_component) <= tol);
    for (int sigma = 1; sigma <= a.spin.two_s(); ++sigma) {
        CHECK(std::abs(a.radius(sigma) - b.radius(sigma)) <= tol);
        const TBlock* x = a.block(sigma);
        const TBlock* y = b.block(sigma);
        CHECK((x == nullptr) == (y == nullptr));
        if (x && y && x->w > 1e-6)
            CHECK(same_class(x->cls, y->cls, 1e-6));
    }
}

} // namespace

TEST_CASE("radii of the standard spin-3/2 states") {
    const double r5 = std::sqrt(5.0);
    check_radii(decompose(named(NamedState::coherent, 3)), {3 / (2 * r5), 0.5, 1 / (2 * r5)});
    check_radii(decompose(named(NamedState::ghz, 3)), {0.0, 0.5, 1 / std::sqrt(2.0)});
    check_radii(decompose(named(NamedState::w, 3)), {1 / (2 * r5), 0.5, 3 / (2 * r5)});
    // every SC class is a tuple of +z
    for (const auto& b : decompose(named(NamedState::coherent, 3)).blocks)
        for (const auto& s : b.cls.stars)
            CHECK(std::min(s.theta, pi - s.theta) < 1e-6);
    CHECK(decompose(named(NamedState::ghz, 3)).block(1) == nullptr);
}

TEST_CASE("reduced radii of the standard states") {
    const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
    const TRep sc = decompose(named(NamedState::coherent, 3));
    check_radii(reduce(sc, 1), {1 / r2, 1 / r6});
    check_radii(reduce(sc, 2), {1 / r2});
    const TRep ghz = decompose(named(NamedState::ghz, 3));
    check_radii(reduce(ghz, 1), {0.0, 1 / r6});
    check_radii(reduce(ghz, 2), {0.0});
    const TRep w = decompose(named(NamedState::w, 3));
    check_radii(reduce(w, 1), {1 / (3 * r2), 1 / r6});
    check_radii(reduce(w, 2), {1 / (3 * r2)});

    const TRep point = reduce(w, 3);
    CHECK(point.spin.two_s() == 0);
    CHECK(point.blocks.empty());
    CHECK(point.trace_component == doctest::Approx(1.0));
    CHECK_THROWS_AS(reduce(w, 4), InvalidArgument);
}

TEST_CASE("spin-1/2 Bloch vector") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const Star n = testing::random_star(rng);
        const double r = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
        const Vec3 bloch = r * n.vector();
        Matrix rho(2, 2);
        rho << 1 + bloch.z(), cplx(bloch.x(), -bloch.y()), cplx(bloch.x(), bloch.y()), 1 - bloch.z();
        rho /= 2.0;
        const TRep t = decompose(rho);
        CHECK(t.radius(1) == doctest::Approx(r / std::sqrt(2.0)).epsilon(1e-12));
        const auto& cls = t.block(1)->cls;
        CHECK(angular_distance(cls.stars[0], cls.stars[1].antipode()) < 1e-10);
        const Star rep = cls.representative()[0];
        CHECK(std::min(angular_distance(rep, n), angular_distance(rep, n.antipode())) < 1e-10);
        // the class is [r]: the parity is +1 exactly when the representative points along r
        CHECK((cls.parity == 1) == (angular_distance(rep, n) < pi / 2));
        // antipodal conjugation gives [-r]
        const TRep flipped = antipodal_conjugate(t);
        CHECK(flipped.block(1)->cls.parity == -cls.parity);
        CHECK(max_abs_diff(reconstruct(flipped), Matrix::Identity(2, 2) - rho) < 1e-12);
    }
}

TEST_CASE("maximally mixed and Hermitian inputs") {
    for (int n = 1; n <= 6; ++n) {
        const TRep t = decompose(named(NamedState::maximally_mixed, n));
        CHECK(t.blocks.empty());
        CHECK(t.trace_component == doctest::Approx(1 / std::sqrt(n + 1.0)));
        CHECK(max_abs_diff(reconstruct(t), Matrix::Identity(n + 1, n + 1) / (n + 1.0)) < 1e-14);
        const auto report = positivity_checks(t);
        CHECK(report.purity_bound_ok);
        CHECK(report.mehta_ball);
        CHECK(report.eigen_positive);
    }
    std::mt19937_64 rng(52);
    const Matrix h = testing::random_hermitian(Spin(3), rng);
    CHECK(max_abs_diff(reconstruct(decompose(h)), h) < 1e-10);
    CHECK_THROWS_AS(decompose(testing::random_matrix(4, rng)), ValidationError);
    CHECK_THROWS_AS(positivity_checks(decompose(h)), ValidationError);
}

TEST_CASE("decompose and reconstruct are inverse") {
    std::mt19937_64 rng(53);
    for (int n = 1; n <= 8; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            const Matrix rho = testing::random_density(Spin(n), rng);
            const TRep t = decompose(rho);
            CHECK(max_abs_diff(reconstruct(t), rho) < 1e-9);
            check_same_trep(decompose(reconstruct(t)), t, 1e-9);
        }
}

TEST_CASE("closed forms") {
    // coherent state
    for (int n = 1; n <= 10; ++n) {
        const TRep t = decompose(named(NamedState::coherent, n));
        for (int sigma = 1; sigma <= n; ++sigma) {
            const double ref = factorial(n) * std::sqrt((2 * sigma + 1) / (factorial(n + sigma + 1) * factorial(n - sigma)));
            CHECK(std::abs(t.radius(sigma) - ref) < 1e-10);
        }
    }
    // Dicke: w_sigma = |<s m; s -m | sigma 0>|
    for (int n = 1; n <= 6; ++n) {
        const testing::CgTable cg(n, n);
        for (int two_m = n; two_m >= -n; two_m -= 2) {
            const TRep t = decompose(dicke_state(Spin(n), two_m).density());
            for (int sigma = 1; sigma <= n; ++sigma)
                CHECK(std::abs(t.radius(sigma) - std::abs(cg(two_m, -two_m, 2 * sigma, 0))) < 1e-10);
        }
    }
    // cat states
    for (int n = 1; n <= 10; ++n) {
        const CatRadii c = cat_radii(Spin(n));
        CHECK(std::abs(decompose(named(NamedState::cat_classical, n)).radius(n) - c.classical) < 1e-10);
        CHECK(std::abs(decompose(named(NamedState::cat_quantum, n)).radius(n) - c.quantum) < 1e-10);
    }
    CHECK(cat_radii(Spin(2)).classical == doctest::Approx(1 / std::sqrt(6.0)));
    CHECK(cat_radii(Spin(3)).quantum == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(cat_radii(Spin(3)).classical == 0.0);
    CHECK(cat_radii(Spin(6)).classical == doctest::Approx(factorial(6) / std::sqrt(factorial(12))));
}

TEST_CASE("cat-state top-block constellations") {
    for (int n = 1; n <= 8; ++n) {
        const TRep t = decompose(named(NamedState::cat_quantum, n));
        const auto& stars = t.block(n)->cls.stars;
        REQUIRE(stars.size() == static_cast<size_t>(2 * n));
        for (const auto& s : stars)
            CHECK(s.theta == doctest::Approx(pi / 2).epsilon(1e-6));
        // distinct azimuths: 2n for odd n, n doubly degenerate for even n
        std::vector<double> phis;
        for (const auto& s : stars) {
            const bool seen = std::any_of(phis.begin(), phis.end(), [&](double p) {
                return std::abs(std::remainder(p - s.phi, 2 * pi)) < 1e-5;
            });
            if (!seen)
                phis.push_back(s.phi);
        }
        CHECK(phis.size() == static_cast<size_t>(n % 2 ? 2 * n : n));
    }
}

TEST_CASE("reduction on radii agrees with the matrix partial trace") {
    std::mt19937_64 rng(54);
    for (int n = 1; n <= 8; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            const Matrix rho = testing::random_density(Spin(n), rng);
            const TRep t = decompose(rho);
            for (int k = 1; k <= n; ++k)
                check_same_trep(reduce(t, k), decompose(oracle::partial_trace(rho, k)), 1e-9);
        }
    // cats lose their difference with one constituent
    for (int n = 1; n <= 10; ++n)
        check_same_trep(reduce(decompose(named(NamedState::cat_quantum, n)), 1),
                        reduce(decompose(named(NamedState::cat_classical, n)), 1), 1e-10);
}

TEST_CASE("radii grow under particle loss exactly for low sigma") {
    for (int n = 2; n <= 12; ++n) {
        const TRep t = decompose(named(NamedState::coherent, n));
        const TRep r = reduce(t, 1);
        for (int sigma = 1; sigma < n; ++sigma) {
            const bool grows = r.radius(sigma) > t.radius(sigma);
            CHECK(grows == (2 * sigma * (sigma + 1) < 2 * n));
        }
    }
}

TEST_CASE("positivity checks") {
    std::mt19937_64 rng(55);
    for (int n = 1; n <= 6; ++n) {
        const Vector v = testing::random_ket(Spin(n), rng);
        const TRep pure = decompose(v * v.adjoint());
        const auto rep = positivity_checks(pure);
        CHECK(std::abs(rep.sum_w2 - n / (n + 1.0)) < 1e-10);
        CHECK(rep.purity_bound_ok);
        CHECK(rep.eigen_positive);
        // for spin 1/2 the ball is the whole Bloch ball
        CHECK(rep.mehta_ball == (n == 1));
    }
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 50; ++trial) {
            const double radius2 = 1.0 / (n * (n + 1.0));
            const TRep t = sample_trep(Spin(n), radius2 * std::uniform_real_distribution<double>(0, 1)(rng), rng);
            const auto rep = positivity_checks(t);
            CHECK(rep.mehta_ball);
            CHECK(rep.eigen_positive);
            CHECK(rep.min_eigenvalue >= -1e-10);
        }
    // outside the purity bound nothing can be a state
    const TRep big = sample_trep(Spin(3), 2.0, rng);
    const auto rep = positivity_checks(big);
    CHECK_FALSE(rep.purity_bound_ok);
    CHECK_FALSE(rep.eigen_positive);
}

TEST_CASE("antipodal conjugation") {
    std::mt19937_64 rng(56);
    for (int n = 1; n <= 6; ++n) {
        for (int two_m = n; two_m >= -n; two_m -= 2)
            check_same_trep(antipodal_conjugate(decompose(dicke_state(Spin(n), two_m).density())),
                            decompose(dicke_state(Spin(n), -two_m).density()), 1e-9);
        const Matrix rho = testing::random_density(Spin(n), rng);
        const TRep t = decompose(rho);
        check_same_trep(antipodal_conjugate(t), decompose(antipodal_conjugate_operator(Spin(n), rho)), 1e-9);
        check_same_trep(antipodal_conjugate(antipodal_conjugate(t)), t, 0.0);
        for (const auto& b : antipodal_conjugate(t).blocks)
            CHECK(b.cls.parity == t.block(b.sigma)->cls.parity * (b.sigma % 2 ? -1 : 1));
    }
}

TEST_CASE("rotation covariance") {
    std::mt19937_64 rng(57);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const Matrix rho = testing::random_density(Spin(n), rng);
            const Rotation r = testing::random_euler(rng).rotation();
            const TRep t = decompose(rho), moved = decompose(rotate_operator(rho, r));
            for (const auto& b : t.blocks) {
                CHECK(std::abs(moved.radius(b.sigma) - b.w) < 1e-10);
                std::vector<Star> reps;
                for (const auto& s : b.cls.representative())
                    reps.push_back(Star::from_vector(r.apply(s.vector())));
                CHECK(same_class(moved.block(b.sigma)->cls, make_class(reps, b.cls.parity), 1e-7));
            }
        }
}

TEST_CASE("Majorana constellation from the top class") {
    const TRep up = pure_state_classes(coherent_state(Spin(4), Star{0.0, 0.0}));
    for (const auto& s : recover_majorana(up))
        CHECK(s.theta < 1e-6);

    std::mt19937_64 rng(58);
    for (int n = 1; n <= 8; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const PureState psi{Spin(n), testing::random_ket(Spin(n), rng)};
            const auto direct = constellation_of(psi);
            const TRep t = pure_state_classes(psi);
            // the top block holds C and -C
            std::vector<Star> doubled = direct;
            for (const auto& s : direct)
                doubled.push_back(s.antipode());
            auto top = t.block(n)->cls.stars;
            for (const auto& s : doubled) {
                auto it = std::min_element(top.begin(), top.end(), [&](const Star& a, const Star& b) {
                    return angular_distance(a, s) < angular_distance(b, s);
                });
                CHECK(angular_distance(*it, s) < 1e-6);
                top.erase(it);
            }
            auto recovered = recover_majorana(t);
            REQUIRE(recovered.size() == direct.size());
            for (const auto& s : direct) {
                auto it = std::min_element(recovered.begin(), recovered.end(), [&](const Star& a, const Star& b) {
                    return angular_distance(a, s) < angular_distance(b, s);
                });
                CHECK(angular_distance(*it, s) < 1e-7);
                recovered.erase(it);
            }
        }
}
