#include "spinrep/trep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinrep/angular.hpp"
#include "spinrep/srep.hpp"

namespace spinrep {

const TBlock* TRep::block(int sigma) const {
    for (const auto& b : blocks)
        if (b.sigma == sigma)
            return &b;
    return nullptr;
}

double TRep::radius(int sigma) const {
    const TBlock* b = block(sigma);
    return b ? b->w : 0.0;
}

std::vector<double> TRep::radii() const {
    std::vector<double> out;
    for (int sigma = 1; sigma <= spin.two_s(); ++sigma)
        out.push_back(radius(sigma));
    return out;
}

Vector block_components(const Matrix& rho, int sigma) {
    const Spin s(static_cast<int>(rho.rows()) - 1);
    const auto& basis = TensorBasis::get(s);
    Vector v(2 * sigma + 1);
    for (int i = 0; i <= 2 * sigma; ++i)
        // Tr(rho T^dagger) = sum conj(T) .* rho
        v(i) = basis.op(sigma, sigma - i).conjugate().cwiseProduct(rho).sum();
    return v;
}

TRep decompose(const Matrix& rho, double angle_tol) {
    if (rho.rows() != rho.cols() || rho.rows() == 0)
        throw InvalidArgument("decompose: operator must be square and non-empty");
    const double herm = hermiticity_residual(rho);
    if (herm > 1e-8)
        throw ValidationError("decompose: operator is not Hermitian (residual " + std::to_string(herm) + ")");
    const Spin s(static_cast<int>(rho.rows()) - 1);
    TRep t{s, rho.trace().real() / std::sqrt(static_cast<double>(s.dim())), {}};
    for (int sigma = 1; sigma <= s.two_s(); ++sigma) {
        const Vector v = block_components(rho, sigma);
        const double w = v.norm();
        if (w < absent_block_threshold)
            continue;
        t.blocks.push_back({sigma, w, extract_class(v / w, angle_tol)});
    }
    return t;
}

Matrix reconstruct(const TRep& t) {
    const Spin s = t.spin;
    Matrix rho = t.trace_component / std::sqrt(static_cast<double>(s.dim())) * Matrix::Identity(s.dim(), s.dim());
    const auto& basis = TensorBasis::get(s);
    for (const auto& b : t.blocks) {
        if (b.sigma < 1 || b.sigma > s.two_s())
            throw InvalidArgument("reconstruct: block rank " + std::to_string(b.sigma) + " outside [1, 2s]");
        if (b.cls.sigma != b.sigma || static_cast<int>(b.cls.stars.size()) != 2 * b.sigma)
            throw InvalidArgument("reconstruct: class of block " + std::to_string(b.sigma) +
                                  " does not have 2 sigma stars");
        const Vector v = b.cls.block_vector();
        for (int i = 0; i <= 2 * b.sigma; ++i)
            rho += b.w * v(i) * basis.op(b.sigma, b.sigma - i);
    }
    return rho;
}

TRep reduce(const TRep& t, int k) {
    const int n = t.spin.two_s();
    if (k < 0 || k > n)
        throw InvalidArgument("reduce: cannot trace out " + std::to_string(k) + " of " + std::to_string(n) +
                              " constituents");
    TRep out = t;
    for (int step = 0; step < k; ++step) {
        const Spin cur(n - step);
        out.trace_component *= reduction_factor(cur, 0);
        std::vector<TBlock> kept;
        for (auto& b : out.blocks) {
            if (b.sigma > cur.two_s() - 1)
                continue;
            b.w *= reduction_factor(cur, b.sigma);
            kept.push_back(std::move(b));
        }
        out.blocks = std::move(kept);
        out.spin = Spin(cur.two_s() - 1);
    }
    return out;
}

CatRadii cat_radii(Spin s) {
    const int n = s.two_s();
    if (n == 0)
        throw InvalidArgument("cat_radii: spin must be at least 1/2");
    if (n % 2)
        return {0.0, 1.0 / std::sqrt(2.0)};
    // (2s)! / sqrt((4s)!) = sqrt(1 / C(2N, N))
    const double c2 = 1.0 / binomial(2 * n, n);
    return {std::sqrt(c2), std::sqrt(0.5 + c2)};
}

PositivityReport positivity_checks(const TRep& t, double eig_tol) {
    const Spin s = t.spin;
    const double d = s.dim();
    if (std::abs(t.trace_component - 1.0 / std::sqrt(d)) > 1e-9)
        throw ValidationError("positivity_checks: TRep does not describe a unit-trace operator");
    PositivityReport r;
    for (const auto& b : t.blocks)
        r.sum_w2 += b.w * b.w;
    const int n = s.two_s();
    constexpr double slack = 1e-12;
    r.purity_bound_ok = r.sum_w2 <= n / d + slack;
    r.mehta_ball = n == 0 || r.sum_w2 <= 1.0 / (n * d) + slack;
    const Matrix rho = reconstruct(t);
    r.min_eigenvalue = min_eigenvalue(0.5 * (rho + rho.adjoint()));
    r.eigen_positive = r.min_eigenvalue >= -eig_tol;
    return r;
}

TRep antipodal_conjugate(const TRep& t) {
    TRep out = t;
    for (auto& b : out.blocks)
        if (b.sigma % 2)
            b.cls.parity = -b.cls.parity;
    return out;
}

TRep pure_state_classes(const PureState& psi) { return decompose(psi.density()); }

namespace {

double husimi_at(const Matrix& rho, Spin s, const Star& n) {
    const Vector c = coherent_state(s, n).amplitudes;
    return c.dot(rho * c).real();
}

} // namespace

Constellation recover_majorana(const TRep& t) {
    const int n = t.spin.two_s();
    if (n == 0)
        return {};
    const TBlock* top = t.block(n);
    if (!top)
        throw NumericalError("recover_majorana: top-rank block is absent");
    const Matrix rho = reconstruct(t);
    const auto reps = top->cls.representative();

    // Pairs where only one orientation is a Husimi zero are decided directly;
    // axes carrying zeros at both ends are decided by fidelity over splits.
    constexpr double zero_tol = 1e-10;
    Constellation fixed;
    std::vector<Star> open_axes;
    for (const auto& r : reps) {
        const double hp = husimi_at(rho, t.spin, r), hm = husimi_at(rho, t.spin, r.antipode());
        if (hp < zero_tol && hm < zero_tol)
            open_axes.push_back(r);
        else
            fixed.push_back(hp < hm ? r.antipode() : r);
    }
    if (open_axes.empty())
        return fixed;

    // group ambiguous axes that coincide
    std::vector<std::pair<Star, int>> groups;
    for (const auto& r : open_axes) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return angular_distance(g.first, r) < 1e-6; });
        if (it == groups.end())
            groups.push_back({r, 1});
        else
            ++it->second;
    }
    std::vector<int> split(groups.size(), 0);
    Constellation best;
    double best_fid = -1.0;
    while (true) {
        Constellation cand = fixed;
        for (size_t g = 0; g < groups.size(); ++g)
            for (int k = 0; k < groups[g].second; ++k)
                cand.push_back(k < split[g] ? groups[g].first : groups[g].first.antipode());
        const Vector phi = pure_from_stars(cand).amplitudes;
        const double fid = phi.dot(rho * phi).real();
        if (fid > best_fid) {
            best_fid = fid;
            best = cand;
        }
        size_t g = 0;
        while (g < groups.size() && ++split[g] > groups[g].second)
            split[g++] = 0;
        if (g == groups.size())
            break;
    }
    return best;
}

TRep sample_trep(Spin s, double sum_w2, std::mt19937_64& rng) {
    const int n = s.two_s();
    if (sum_w2 < 0)
        throw InvalidArgument("sample_trep: negative radius");
    TRep t{s, 1.0 / std::sqrt(static_cast<double>(s.dim())), {}};
    if (n == 0)
        return t;
    std::normal_distribution<double> gauss;
    std::vector<double> dir(static_cast<size_t>(n));
    double norm = 0.0;
    for (auto& x : dir) {
        x = gauss(rng);
        norm += x * x;
    }
    norm = std::sqrt(norm);
    for (int sigma = 1; sigma <= n; ++sigma) {
        const double w = std::sqrt(sum_w2) * std::abs(dir[static_cast<size_t>(sigma - 1)]) / norm;
        if (w < absent_block_threshold)
            continue;
        std::vector<Star> tuple;
        for (int k = 0; k < sigma; ++k)
            tuple.push_back(Star::from_vector(Vec3(gauss(rng), gauss(rng), gauss(rng))));
        const int parity = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
        t.blocks.push_back({sigma, w, make_class(tuple, parity)});
    }
    return t;
}

} // namespace spinrep
