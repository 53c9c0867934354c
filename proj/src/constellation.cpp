#include "spinrep/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "spinrep/angular.hpp"
#include "spinrep/polynomial.hpp"

namespace spinrep {

Star stereographic(const ExtendedComplex& zeta) {
    if (zeta.infinite)
        return {std::numbers::pi, 0.0};
    Star s;
    s.theta = 2.0 * std::atan(std::abs(zeta.value));
    s.phi = zeta.value == 0.0 ? 0.0 : std::arg(zeta.value);
    if (s.phi < 0)
        s.phi += 2 * std::numbers::pi;
    if (s.phi >= 2 * std::numbers::pi) // -tiny wraps to exactly 2 pi
        s.phi = 0.0;
    return s;
}

ExtendedComplex inverse_stereographic(const Star& s) {
    if (s.theta >= std::numbers::pi)
        return ExtendedComplex::infinity();
    return {std::tan(s.theta / 2) * std::polar(1.0, s.phi), false};
}

ExtendedComplex antipode(const ExtendedComplex& zeta) {
    if (zeta.infinite)
        return {0.0, false};
    if (zeta.value == 0.0)
        return ExtendedComplex::infinity();
    return {-1.0 / std::conj(zeta.value), false};
}

namespace {

cplx horner(const Vector& a, cplx x) {
    cplx acc = 0.0;
    for (Eigen::Index k = a.size() - 1; k >= 0; --k)
        acc = acc * x + a(k);
    return acc;
}

Vector derivative(const Vector& a) {
    if (a.size() <= 1)
        return Vector::Zero(1);
    Vector d(a.size() - 1);
    for (Eigen::Index k = 1; k < a.size(); ++k)
        d(k - 1) = static_cast<double>(k) * a(k);
    return d;
}

/// Size of d^j/dx^j sum_k e_k x^k at x for |e_k| <= 1: the scale of p^{(j)}(x)
/// under coefficient perturbations of unit size.
double perturbation_scale(int degree, int j, cplx x) {
    double acc = 0.0;
    const double r = std::abs(x);
    for (int k = degree; k >= j; --k)
        acc = acc * r + factorial_ratio({k}, {k - j});
    return acc;
}

/// Parlett-Reinsch balancing, radix 2.
void balance(Matrix& m) {
    const Eigen::Index n = m.rows();
    bool converged = false;
    while (!converged) {
        converged = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                c += std::abs(m(j, i));
                r += std::abs(m(i, j));
            }
            if (c == 0.0 || r == 0.0)
                continue;
            const double s = c + r;
            double f = 1.0;
            while (c < r / 2) {
                c *= 2;
                r /= 2;
                f *= 2;
            }
            while (c >= r * 2) {
                c /= 2;
                r *= 2;
                f /= 2;
            }
            if (c + r < 0.95 * s) {
                converged = false;
                m.row(i) /= f;
                m.col(i) *= f;
            }
        }
    }
}

std::vector<cplx> companion_roots(const Vector& c) {
    const int m = static_cast<int>(c.size()) - 1;
    if (m == 1)
        return {-c(0) / c(1)};
    // zeta = rho w evens out the coefficient magnitudes.
    const double rho = std::pow(std::abs(c(0)) / std::abs(c(m)), 1.0 / m);
    Vector b(m + 1);
    double pw = 1.0;
    for (int k = 0; k <= m; ++k) {
        b(k) = c(k) * pw;
        pw *= rho;
    }
    b /= b(m);
    Matrix comp = Matrix::Zero(m, m);
    for (int j = 0; j < m; ++j)
        comp(0, j) = -b(m - 1 - j);
    for (int i = 1; i < m; ++i)
        comp(i, i - 1) = 1.0;
    balance(comp);
    Eigen::ComplexEigenSolver<Matrix> es(comp, false);
    if (es.info() != Eigen::Success)
        throw NumericalError("polynomial_roots: eigenvalue iteration did not converge");
    std::vector<cplx> out;
    out.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        out.push_back(rho * es.eigenvalues()(i));
    return out;
}

Vector reversed(const Vector& a) { return a.reverse(); }

/// Newton iterations that are only kept while |p| decreases.
cplx newton_polish(const Vector& a, cplx x, int iters = 8) {
    const Vector da = derivative(a);
    cplx best = x;
    double best_res = std::abs(horner(a, x));
    for (int it = 0; it < iters && best_res > 0.0; ++it) {
        const cplx d = horner(da, best);
        if (d == 0.0)
            break;
        const cplx next = best - horner(a, best) / d;
        const double res = std::abs(horner(a, next));
        if (!(res < best_res))
            break;
        best = next;
        best_res = res;
    }
    return best;
}

cplx polish_root(const Vector& a, cplx z) {
    if (std::abs(z) <= 1.0)
        return newton_polish(a, z);
    const cplx w = newton_polish(reversed(a), 1.0 / z);
    return w == 0.0 ? z : 1.0 / w;
}

double chordal(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.infinite && b.infinite)
        return 0.0;
    if (a.infinite || b.infinite) {
        const cplx z = a.infinite ? b.value : a.value;
        return 2.0 / std::sqrt(1.0 + std::norm(z));
    }
    return 2.0 * std::abs(a.value - b.value) / std::sqrt((1.0 + std::norm(a.value)) * (1.0 + std::norm(b.value)));
}

/// Try to replace a cluster of k nearby roots by a single k-fold root found on
/// p^{(k-1)}; accepted only if p, ..., p^{(k-1)} all vanish there to working accuracy.
/// Works in the chart w = 1/zeta when the cluster lies outside the unit disc.
bool refine_cluster(const Vector& a, std::vector<ExtendedComplex>& roots, const std::vector<int>& members) {
    const int k = static_cast<int>(members.size());
    int outside = 0;
    for (int i : members) {
        const auto& r = roots[static_cast<size_t>(i)];
        if (r.infinite || std::abs(r.value) > 1.0)
            ++outside;
    }
    const bool flip = 2 * outside > k;
    cplx x = 0.0;
    for (int i : members) {
        const auto& r = roots[static_cast<size_t>(i)];
        if (flip)
            x += r.infinite ? cplx(0.0) : 1.0 / r.value;
        else if (r.infinite)
            return false;
        else
            x += r.value;
    }
    x /= static_cast<double>(k);

    std::vector<Vector> ders{flip ? reversed(a) : a};
    for (int j = 1; j < k; ++j)
        ders.push_back(derivative(ders.back()));
    x = newton_polish(ders.back(), x, 12);

    // backward error relative to the largest coefficient
    constexpr double tol = 1e-10;
    const double amax = a.cwiseAbs().maxCoeff();
    const int deg = static_cast<int>(a.size()) - 1;
    for (int j = 0; j < k; ++j)
        if (std::abs(horner(ders[static_cast<size_t>(j)], x)) > tol * amax * perturbation_scale(deg, j, x))
            return false;
    ExtendedComplex z{x, false};
    if (flip)
        z = x == 0.0 ? ExtendedComplex::infinity() : ExtendedComplex{1.0 / x, false};
    for (int i : members)
        roots[static_cast<size_t>(i)] = z;
    return true;
}

void merge_degenerate(const Vector& a, std::vector<ExtendedComplex>& roots) {
    const int m = static_cast<int>(roots.size());
    std::vector<bool> settled(static_cast<size_t>(m), false);
    for (double threshold : {0.3, 0.1, 0.03, 0.01, 3e-3, 1e-3}) {
        // single-linkage components among unsettled roots
        std::vector<int> parent(static_cast<size_t>(m));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int i) {
            while (parent[static_cast<size_t>(i)] != i)
                i = parent[static_cast<size_t>(i)];
            return i;
        };
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                if (settled[static_cast<size_t>(i)] || settled[static_cast<size_t>(j)])
                    continue;
                if (chordal(roots[static_cast<size_t>(i)], roots[static_cast<size_t>(j)]) < threshold)
                    parent[static_cast<size_t>(find(i))] = find(j);
            }
        std::vector<std::vector<int>> groups(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i)
            if (!settled[static_cast<size_t>(i)])
                groups[static_cast<size_t>(find(i))].push_back(i);
        for (const auto& g : groups) {
            if (g.size() < 2)
                continue;
            if (refine_cluster(a, roots, g))
                for (int i : g)
                    settled[static_cast<size_t>(i)] = true;
        }
    }
}

} // namespace

std::vector<ExtendedComplex> polynomial_roots(const Vector& a) {
    if (a.size() == 0)
        throw InvalidArgument("polynomial_roots: empty coefficient vector");
    const double amax = a.cwiseAbs().maxCoeff();
    if (amax == 0.0)
        throw InvalidArgument("polynomial_roots: zero polynomial");
    const double thr = 1e-12 * amax;
    const int d = static_cast<int>(a.size()) - 1;
    int hi = d, lo = 0;
    while (std::abs(a(hi)) < thr)
        --hi;
    while (std::abs(a(lo)) < thr)
        ++lo;

    std::vector<ExtendedComplex> out;
    out.reserve(static_cast<size_t>(d));
    for (int i = 0; i < lo; ++i)
        out.push_back({0.0, false});
    const int m = hi - lo;
    if (m > 0) {
        Vector core = a.segment(lo, m + 1);
        for (int k = 0; k <= m; ++k)
            if (std::abs(core(k)) < thr)
                core(k) = 0.0;
        for (auto z : companion_roots(core))
            out.push_back({polish_root(core, z), false});
    }
    for (int i = hi; i < d; ++i)
        out.push_back(ExtendedComplex::infinity());
    // Deflated roots take part: a high-order cluster near a pole can lose its
    // smallest coefficient to the threshold.
    merge_degenerate(a, out);
    return out;
}

std::vector<ExtendedComplex> roots(const Vector& v) {
    if (v.size() % 2 == 0)
        throw InvalidArgument("roots: block vector must have odd length 2 sigma + 1");
    const int n = static_cast<int>(v.size()) - 1;
    Vector a(n + 1);
    for (int i = 0; i <= n; ++i)
        a(n - i) = parity_sign(i) * std::sqrt(binomial(n, i)) * v(i);
    return polynomial_roots(a);
}

Constellation block_stars(const Vector& v) {
    Constellation out;
    for (const auto& z : roots(v))
        out.push_back(stereographic(z));
    return out;
}

Constellation constellation_of(const PureState& psi) {
    const PureMajoranaPoly q = pure_poly(psi);
    Constellation out;
    if (q.degree() == 0)
        return out;
    for (const auto& z : polynomial_roots(q.coeffs))
        out.push_back(stereographic(z));
    return out;
}

ExtendedComplex mobius_rotate(const ExtendedComplex& zeta, const Star& axis, double eta) {
    const double c = std::cos(eta / 2), s = std::sin(eta / 2);
    const cplx a(c, s * std::cos(axis.theta));
    const cplx b = cplx(0.0, s * std::sin(axis.theta)) * std::polar(1.0, axis.phi);
    // homogeneous coordinates (zeta : 1), infinity = (1 : 0)
    const cplx h1 = zeta.infinite ? cplx(1.0) : zeta.value;
    const cplx h2 = zeta.infinite ? cplx(0.0) : cplx(1.0);
    const cplx w1 = a * h1 - b * h2;
    const cplx w2 = std::conj(b) * h1 + std::conj(a) * h2;
    if (std::abs(w2) <= 1e-300 * std::abs(w1))
        return ExtendedComplex::infinity();
    return {w1 / w2, false};
}

Pairing antipodal_pairing(std::span<const Star> stars, double tol) {
    const int n = static_cast<int>(stars.size());
    if (n % 2)
        throw NumericalError("antipodal_pairing: odd number of stars");
    struct Candidate {
        double angle;
        int i, j;
    };
    std::vector<Vec3> vecs;
    for (const auto& s : stars)
        vecs.push_back(s.vector());
    std::vector<Candidate> cands;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Vec3 u = vecs[static_cast<size_t>(i)], v = -vecs[static_cast<size_t>(j)];
            cands.push_back({std::atan2(u.cross(v).norm(), u.dot(v)), i, j});
        }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& x, const Candidate& y) { return x.angle < y.angle; });
    std::vector<bool> used(static_cast<size_t>(n), false);
    Pairing out;
    for (const auto& c : cands) {
        if (used[static_cast<size_t>(c.i)] || used[static_cast<size_t>(c.j)])
            continue;
        used[static_cast<size_t>(c.i)] = used[static_cast<size_t>(c.j)] = true;
        out.pairs.push_back({c.i, c.j});
        out.residual = std::max(out.residual, c.angle);
    }
    if (out.residual > tol)
        throw NumericalError("antipodal_pairing: constellation is not antipodally symmetric (residual " +
                             std::to_string(out.residual) + " rad)");
    return out;
}

Star canonical_orientation(const Star& n) {
    const Vec3 v = n.vector();
    constexpr double tie = 1e-9;
    bool keep;
    if (std::abs(v.z()) > tie)
        keep = v.z() > 0;
    else if (std::abs(v.x()) > tie)
        keep = v.x() > 0;
    else
        keep = v.y() > 0;
    return keep ? n : n.antipode();
}

Vector block_u_vector(std::span<const Star> tuple) {
    if (tuple.empty())
        throw InvalidArgument("block_u_vector: empty tuple");
    const PureState phi = pure_from_stars(tuple);
    const int sigma = static_cast<int>(tuple.size());
    const auto& basis = TensorBasis::get(phi.spin);
    Vector u(2 * sigma + 1);
    for (int i = 0; i <= 2 * sigma; ++i) {
        const int mu = sigma - i;
        u(i) = std::conj(phi.amplitudes.dot(basis.op(sigma, mu) * phi.amplitudes));
    }
    const double norm = u.norm();
    if (norm == 0.0)
        throw NumericalError("block_u_vector: vanishing class vector");
    return u / norm;
}

std::vector<Star> SubconstellationClass::representative() const {
    std::vector<Star> out;
    for (size_t k = 0; k < stars.size(); k += 2)
        out.push_back(stars[k]);
    return out;
}

std::vector<std::array<int, 2>> SubconstellationClass::pairs() const {
    std::vector<std::array<int, 2>> out;
    for (int k = 0; k < sigma; ++k)
        out.push_back({2 * k, 2 * k + 1});
    return out;
}

Vector SubconstellationClass::block_vector() const {
    return static_cast<double>(parity) * block_u_vector(representative());
}

int parity_relative_to(const Vector& v, std::span<const Star> tuple) {
    const Vector u = block_u_vector(tuple);
    const cplx ov = u.dot(v);
    if (std::abs(std::abs(ov) - 1.0) > 1e-6)
        throw NumericalError("class extraction: |<u, v>| = " + std::to_string(std::abs(ov)) +
                             " differs from 1");
    return ov.real() >= 0 ? 1 : -1;
}

namespace {

bool flips_orientation(const Star& n) {
    const Star c = canonical_orientation(n);
    return c.theta != n.theta || c.phi != n.phi;
}

SubconstellationClass class_from_canonical(std::vector<Star> reps, int parity) {
    std::sort(reps.begin(), reps.end(), [](const Star& a, const Star& b) {
        return a.theta != b.theta ? a.theta < b.theta : a.phi < b.phi;
    });
    SubconstellationClass cls;
    cls.sigma = static_cast<int>(reps.size());
    for (const auto& r : reps) {
        cls.stars.push_back(r);
        cls.stars.push_back(r.antipode());
    }
    cls.parity = parity;
    return cls;
}

} // namespace

SubconstellationClass make_class(std::span<const Star> tuple, int parity) {
    if (tuple.empty())
        throw InvalidArgument("make_class: empty tuple");
    if (parity != 1 && parity != -1)
        throw InvalidArgument("make_class: parity must be +1 or -1");
    std::vector<Star> reps;
    for (const auto& n : tuple) {
        if (flips_orientation(n))
            parity = -parity;
        reps.push_back(canonical_orientation(n));
    }
    return class_from_canonical(std::move(reps), parity);
}

SubconstellationClass extract_class(const Vector& v, double angle_tol) {
    if (v.size() < 3 || v.size() % 2 == 0)
        throw InvalidArgument("extract_class: block vector must have length 2 sigma + 1 >= 3");
    const int sigma = static_cast<int>(v.size() - 1) / 2;
    const Vector vn = v.normalized();
    const Constellation stars = block_stars(vn);
    const Pairing pairing = antipodal_pairing(stars, angle_tol);

    std::vector<Star> reps;
    for (const auto& [i, j] : pairing.pairs) {
        const Vec3 axis = (stars[static_cast<size_t>(i)].vector() - stars[static_cast<size_t>(j)].vector()).normalized();
        reps.push_back(canonical_orientation(Star::from_vector(axis)));
    }
    if (static_cast<int>(reps.size()) != sigma)
        throw NumericalError("extract_class: pairing does not match the block rank");
    const int parity = parity_relative_to(vn, reps);
    return class_from_canonical(std::move(reps), parity);
}

bool same_class(const SubconstellationClass& a, const SubconstellationClass& b, double tol) {
    if (a.sigma != b.sigma)
        return false;
    const auto ra = a.representative(), rb = b.representative();
    std::vector<bool> used(rb.size(), false);
    for (const auto& x : ra) {
        bool found = false;
        for (size_t k = 0; k < rb.size() && !found; ++k) {
            if (used[k])
                continue;
            const double d = angular_distance(x, rb[k]);
            if (std::min(d, std::numbers::pi - d) <= tol) {
                used[k] = true;
                found = true;
            }
        }
        if (!found)
            return false;
    }
    return parity_relative_to(b.block_vector(), ra) == a.parity;
}

} // namespace spinrep
