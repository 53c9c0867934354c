#include <algorithm>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"

#include "spinrep/angular.hpp"
#include "spinrep/constellation.hpp"

using namespace spinrep;

namespace {

constexpr double pi = std::numbers::pi;

// v_{-mu} = (-1)^mu conj(v_mu), unit norm
Vector random_block(int sigma, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Vector v(2 * sigma + 1);
    for (int i = 0; i <= sigma; ++i) {
        const int mu = sigma - i;
        v(i) = mu == 0 ? cplx(g(rng), 0.0) : cplx(g(rng), g(rng));
        v(2 * sigma - i) = parity_sign(mu) * std::conj(v(i));
    }
    return v.normalized();
}

// best matching of two star multisets, worst angle
double multiset_distance(Constellation a, Constellation b) {
    REQUIRE(a.size() == b.size());
    double worst = 0.0;
    for (const auto& x : a) {
        auto it = std::min_element(b.begin(), b.end(), [&](const Star& p, const Star& q) {
            return angular_distance(x, p) < angular_distance(x, q);
        });
        worst = std::max(worst, angular_distance(x, *it));
        b.erase(it);
    }
    return worst;
}

} // namespace

TEST_CASE("stereographic projection") {
    CHECK(stereographic({0.0, false}).theta == 0.0);
    CHECK(stereographic(ExtendedComplex::infinity()).theta == doctest::Approx(pi));
    const Star eq = stereographic({cplx(0.0, 1.0), false});
    CHECK(eq.theta == doctest::Approx(pi / 2));
    CHECK(eq.phi == doctest::Approx(pi / 2));
    CHECK(inverse_stereographic(Star{pi, 0.0}).infinite);

    std::mt19937_64 rng(41);
    for (int k = 0; k < 50; ++k) {
        const Star s = testing::random_star(rng);
        CHECK(angular_distance(stereographic(inverse_stereographic(s)), s) < 1e-12);
        CHECK(angular_distance(stereographic(antipode(inverse_stereographic(s))), s.antipode()) < 1e-12);
    }
    CHECK(antipode({0.0, false}).infinite);
    CHECK(std::abs(antipode(ExtendedComplex::infinity()).value) == 0.0);
}

TEST_CASE("polynomial roots") {
    // (zeta - 1)(zeta + 2i) = zeta^2 + (2i - 1) zeta - 2i
    Vector a(3);
    a << cplx(0, -2), cplx(-1, 2), 1.0;
    auto r = polynomial_roots(a);
    REQUIRE(r.size() == 2);
    std::sort(r.begin(), r.end(), [](auto& x, auto& y) { return x.value.imag() < y.value.imag(); });
    CHECK(std::abs(r[0].value - cplx(0, -2)) < 1e-13);
    CHECK(std::abs(r[1].value - cplx(1, 0)) < 1e-13);

    // vanishing leading and constant terms
    Vector b = Vector::Zero(5);
    b(2) = 1.0;
    const auto rb = polynomial_roots(b);
    CHECK(std::count_if(rb.begin(), rb.end(), [](auto& x) { return x.infinite; }) == 2);
    CHECK(std::count_if(rb.begin(), rb.end(), [](auto& x) { return !x.infinite && x.value == 0.0; }) == 2);

    // (zeta - 0.3 - 0.1i)^8 stays degenerate
    Vector c = Vector::Zero(9);
    const cplx z0(0.3, 0.1);
    for (int k = 0; k <= 8; ++k)
        c(k) = binomial(8, k) * std::pow(-z0, 8 - k);
    for (const auto& x : polynomial_roots(c))
        CHECK(std::abs(x.value - z0) < 1e-10);
}

TEST_CASE("constellations of standard states") {
    // Dicke |s, m>: s + m stars at the north pole, s - m at the south pole
    for (int n = 1; n <= 8; ++n)
        for (int two_m = n; two_m >= -n; two_m -= 2) {
            const auto stars = constellation_of(dicke_state(Spin(n), two_m));
            const auto north = std::count_if(stars.begin(), stars.end(), [](const Star& s) { return s.theta < 1e-12; });
            const auto south = std::count_if(stars.begin(), stars.end(), [](const Star& s) { return s.theta > pi - 1e-12; });
            CHECK(north == (n + two_m) / 2);
            CHECK(south == (n - two_m) / 2);
        }
    // cat: regular 2s-gon on the equator
    for (int n = 2; n <= 8; ++n) {
        Vector v = Vector::Zero(n + 1);
        v(0) = v(n) = 1.0 / std::sqrt(2.0);
        auto stars = constellation_of(PureState{Spin(n), v});
        std::sort(stars.begin(), stars.end(), [](auto& x, auto& y) { return x.phi < y.phi; });
        for (int k = 0; k < n; ++k) {
            CHECK(stars[static_cast<size_t>(k)].theta == doctest::Approx(pi / 2).epsilon(1e-12));
            const double next = k + 1 < n ? stars[static_cast<size_t>(k + 1)].phi : stars[0].phi + 2 * pi;
            CHECK(next - stars[static_cast<size_t>(k)].phi == doctest::Approx(2 * pi / n).epsilon(1e-10));
        }
    }
    // coherent: every star at n
    std::mt19937_64 rng(42);
    for (int n = 1; n <= 8; ++n) {
        const Star dir = testing::random_star(rng);
        for (const auto& s : constellation_of(coherent_state(Spin(n), dir)))
            CHECK(angular_distance(s, dir) < 1e-8);
    }
}

TEST_CASE("stars round trip through pure_from_stars") {
    std::mt19937_64 rng(43);
    for (int n = 1; n <= 10; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const Vector psi = testing::random_ket(Spin(n), rng);
            const auto stars = constellation_of(PureState{Spin(n), psi});
            const Vector back = pure_from_stars(stars).amplitudes;
            CHECK(std::abs(std::abs(back.dot(psi)) - 1.0) < 1e-10);
            // the antipodal map sends every star to its antipode
            Constellation anti;
            for (const auto& s : stars)
                anti.push_back(s.antipode());
            CHECK(multiset_distance(constellation_of(PureState{Spin(n), antipodal_map(Spin(n), psi)}), anti) < 1e-8);
        }
}

TEST_CASE("Mobius rotation") {
    std::mt19937_64 rng(44);
    const ExtendedComplex z{cplx(0.4, -0.3), false};
    CHECK(std::abs(mobius_rotate(z, Star{0.7, 1.1}, 0.0).value - z.value) < 1e-15);
    // half turn about x: zeta -> 1/zeta
    CHECK(std::abs(mobius_rotate(z, Star{pi / 2, 0.0}, pi).value - 1.0 / z.value) < 1e-14);
    // rotation about z: zeta -> e^{i eta} zeta
    CHECK(std::abs(mobius_rotate(z, Star{0.0, 0.0}, 0.9).value - std::polar(1.0, 0.9) * z.value) < 1e-14);
    CHECK(mobius_rotate(ExtendedComplex::infinity(), Star{0.0, 0.0}, 0.9).infinite);

    for (int trial = 0; trial < 30; ++trial) {
        const Star axis = testing::random_star(rng);
        const double eta = std::uniform_real_distribution<double>(-pi, pi)(rng);
        const Rotation r = Rotation::from_axis_angle(axis.theta, axis.phi, eta);
        const Star s = testing::random_star(rng);
        const Star moved = stereographic(mobius_rotate(inverse_stereographic(s), axis, eta));
        CHECK((moved.vector() - r.apply(s.vector())).norm() < 1e-12);

        // stars of D v are the Mobius images of the stars of v
        const int n = 2 * (1 + trial % 4);
        const Vector psi = testing::random_ket(Spin(n), rng);
        const Vector rotated = wigner_D(Spin(n), r) * psi;
        Constellation expect;
        for (const auto& x : roots(psi))
            expect.push_back(stereographic(mobius_rotate(x, axis, eta)));
        CHECK(multiset_distance(block_stars(rotated), expect) < 1e-8);
    }
}

TEST_CASE("antipodal pairing") {
    const std::vector<Star> stars{{0.3, 0.2}, {pi - 0.3, 0.2 + pi}, {1.0, 4.0}, {pi - 1.0, 4.0 - pi}};
    const Pairing p = antipodal_pairing(stars);
    REQUIRE(p.pairs.size() == 2);
    CHECK(p.pairs[0] == std::array<int, 2>{0, 1});
    CHECK(p.pairs[1] == std::array<int, 2>{2, 3});
    CHECK(p.residual < 1e-14);

    auto noisy = stars;
    noisy[1].theta += 1e-9;
    CHECK(antipodal_pairing(noisy).residual < 1e-8);
    noisy[1].theta += 1e-3;
    CHECK_THROWS_AS(antipodal_pairing(noisy), NumericalError);
    CHECK_THROWS_AS(antipodal_pairing(std::vector<Star>{{0.1, 0.1}}), NumericalError);

    // every Hermitian-symmetric block is antipodally symmetric
    std::mt19937_64 rng(45);
    for (int sigma = 1; sigma <= 8; ++sigma)
        for (int trial = 0; trial < 20; ++trial)
            CHECK(antipodal_pairing(block_stars(random_block(sigma, rng))).residual < 1e-7);
}

TEST_CASE("canonical orientation") {
    CHECK(canonical_orientation(Star{2.0, 1.0}).theta == doctest::Approx(pi - 2.0));
    CHECK(canonical_orientation(Star{0.5, 1.0}).theta == 0.5);
    // equator: x > 0 wins, then y > 0
    CHECK(canonical_orientation(Star{pi / 2, pi}).vector().x() == doctest::Approx(1.0));
    CHECK(canonical_orientation(Star{pi / 2, 3 * pi / 2}).phi == doctest::Approx(pi / 2));
}

TEST_CASE("class extraction") {
    // spin-1/2 Bloch vector: block sigma = 1 is the Bloch vector itself
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 20; ++trial) {
        const Star n = testing::random_star(rng);
        const Matrix rho = coherent_state(Spin(1), n).density();
        Vector v(3);
        const auto& tb = TensorBasis::get(Spin(1));
        for (int i = 0; i < 3; ++i)
            v(i) = (rho * tb.op(1, 1 - i).adjoint()).trace();
        const auto cls = extract_class(v);
        CHECK(cls.sigma == 1);
        const Star rep = cls.representative()[0];
        CHECK(std::min(angular_distance(rep, n), angular_distance(rep, n.antipode())) < 1e-10);
        CHECK((cls.block_vector() - v.normalized()).norm() < 1e-9);
        const auto neg = extract_class(-v);
        CHECK(neg.parity == -cls.parity);
        CHECK(angular_distance(neg.representative()[0], rep) < 1e-10);
    }

    for (int sigma = 1; sigma <= 8; ++sigma)
        for (int trial = 0; trial < 10; ++trial) {
            const Vector v = random_block(sigma, rng);
            const auto cls = extract_class(v);
            CHECK(cls.stars.size() == static_cast<size_t>(2 * sigma));
            CHECK((cls.block_vector() - v).norm() < 1e-8);
            for (const auto& r : cls.representative())
                CHECK(angular_distance(canonical_orientation(r), r) < 1e-12);
            CHECK(same_class(cls, extract_class(v)));
            CHECK_FALSE(same_class(cls, extract_class(-v)));

            // orientation of one representative flips the parity
            auto tuple = cls.representative();
            tuple[0] = tuple[0].antipode();
            CHECK(parity_relative_to(v, tuple) == -cls.parity);
            const auto remade = make_class(tuple, -cls.parity);
            CHECK(same_class(cls, remade));
            CHECK(remade.parity == cls.parity);

            // equivariance under rotations
            const Rotation r = testing::random_euler(rng).rotation();
            const auto moved = extract_class(wigner_D(Spin(2 * sigma), r) * v);
            std::vector<Star> rotated_reps;
            for (const auto& s : cls.representative())
                rotated_reps.push_back(Star::from_vector(r.apply(s.vector())));
            CHECK(same_class(moved, make_class(rotated_reps, cls.parity), 1e-6));
        }

    // Dicke blocks carry the sign of the CG coefficient
    const Matrix d = dicke_state(Spin(2), 0).density();
    Vector v2(5);
    const auto& tb = TensorBasis::get(Spin(2));
    for (int i = 0; i < 5; ++i)
        v2(i) = (d * tb.op(2, 2 - i).adjoint()).trace();
    const auto cls2 = extract_class(v2);
    for (const auto& s : cls2.representative())
        CHECK(s.theta < 1e-6);
    CHECK(cls2.parity == (v2(2).real() > 0 ? 1 : -1));

    CHECK_THROWS_AS(extract_class(Vector::Ones(2)), InvalidArgument);
}
