#include "spinrep/angular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include <boost/multiprecision/cpp_int.hpp>

namespace spinrep {

namespace mp = boost::multiprecision;

namespace {

mp::cpp_int big_factorial(int n) {
    mp::cpp_int r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

bool triangle(int a, int b, int c) {
    return c >= std::abs(a - b) && c <= a + b && (a + b + c) % 2 == 0;
}

double racah(int tj1, int tm1, int tj2, int tm2, int tj, int tm) {
    // Integer combinations of doubled quantum numbers; all must be even.
    const int a = (tj1 + tj2 - tj) / 2;
    const int b = (tj1 - tm1) / 2;
    const int c = (tj2 + tm2) / 2;
    const int d = (tj - tj2 + tm1) / 2;
    const int e = (tj - tj1 - tm2) / 2;

    const int kmin = std::max({0, -d, -e});
    const int kmax = std::min({a, b, c});

    mp::cpp_rational sum = 0;
    for (int k = kmin; k <= kmax; ++k) {
        mp::cpp_int den = big_factorial(k) * big_factorial(a - k) * big_factorial(b - k) *
                          big_factorial(c - k) * big_factorial(d + k) * big_factorial(e + k);
        mp::cpp_rational term(mp::cpp_int(1), den);
        if (k % 2)
            sum -= term;
        else
            sum += term;
    }
    if (sum == 0)
        return 0.0;

    mp::cpp_rational sq = mp::cpp_rational(mp::cpp_int(tj + 1));
    sq *= mp::cpp_rational(big_factorial((tj + tj1 - tj2) / 2) * big_factorial((tj - tj1 + tj2) / 2) *
                               big_factorial((tj1 + tj2 - tj) / 2),
                           big_factorial((tj1 + tj2 + tj) / 2 + 1));
    sq *= mp::cpp_rational(big_factorial((tj + tm) / 2) * big_factorial((tj - tm) / 2) *
                           big_factorial((tj1 - tm1) / 2) * big_factorial((tj1 + tm1) / 2) *
                           big_factorial((tj2 - tm2) / 2) * big_factorial((tj2 + tm2) / 2));
    sq *= sum * sum;
    const double mag = std::sqrt(sq.convert_to<double>());
    return sum > 0 ? mag : -mag;
}

struct CgCache {
    std::shared_mutex mutex;
    std::map<std::array<int, 6>, double> values;
};

CgCache& cg_cache() {
    static CgCache cache;
    return cache;
}

} // namespace

double clebsch_gordan(int tj1, int tm1, int tj2, int tm2, int tj, int tm) {
    if (tj1 < 0 || tj2 < 0 || tj < 0)
        throw InvalidArgument("clebsch_gordan: negative angular momentum");
    if ((tj1 + tm1) % 2 || (tj2 + tm2) % 2 || (tj + tm) % 2)
        throw InvalidArgument("clebsch_gordan: inconsistent parity of j and m");
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm) > tj)
        return 0.0;
    if (tm != tm1 + tm2 || !triangle(tj1, tj2, tj))
        return 0.0;

    const std::array<int, 6> key{tj1, tm1, tj2, tm2, tj, tm};
    auto& cache = cg_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.values.find(key); it != cache.values.end())
            return it->second;
    }
    const double v = racah(tj1, tm1, tj2, tm2, tj, tm);
    std::unique_lock lock(cache.mutex);
    cache.values.emplace(key, v);
    return v;
}

TensorOperator tensor_operator(Spin s, int sigma, int mu) {
    const int n = s.two_s();
    if (sigma < 0 || sigma > n)
        throw InvalidArgument("tensor_operator: rank " + std::to_string(sigma) +
                              " outside [0, 2s]");
    if (std::abs(mu) > sigma)
        throw InvalidArgument("tensor_operator: |mu| > sigma");
    TensorOperator t{s, sigma, mu, Matrix::Zero(s.dim(), s.dim())};
    for (int i = 0; i < s.dim(); ++i) {
        const int tm = two_m_at(s, i);
        for (int j = 0; j < s.dim(); ++j) {
            const int tmp = two_m_at(s, j);
            // (-1)^{s - m'} with s - m' = (n - tmp) / 2 an integer
            const double phase = parity_sign((n - tmp) / 2);
            t.matrix(i, j) = phase * clebsch_gordan(n, tm, n, -tmp, 2 * sigma, 2 * mu);
        }
    }
    return t;
}

TensorBasis::TensorBasis(Spin s) : spin_(s) {
    const int n = s.two_s();
    ops_.reserve(static_cast<size_t>((n + 1) * (n + 1)));
    for (int sigma = 0; sigma <= n; ++sigma)
        for (int mu = sigma; mu >= -sigma; --mu)
            ops_.push_back(tensor_operator(s, sigma, mu).matrix);
}

const Matrix& TensorBasis::op(int sigma, int mu) const {
    if (sigma < 0 || sigma > spin_.two_s() || std::abs(mu) > sigma)
        throw InvalidArgument("TensorBasis::op: index out of range");
    return ops_[static_cast<size_t>(sigma * sigma + (sigma - mu))];
}

const TensorBasis& TensorBasis::get(Spin s) {
    static std::shared_mutex mutex;
    static std::map<int, std::unique_ptr<TensorBasis>> bases;
    {
        std::shared_lock lock(mutex);
        if (auto it = bases.find(s.two_s()); it != bases.end())
            return *it->second;
    }
    auto fresh = std::unique_ptr<TensorBasis>(new TensorBasis(s));
    std::unique_lock lock(mutex);
    auto [it, inserted] = bases.emplace(s.two_s(), std::move(fresh));
    return *it->second;
}

Matrix spin_z(Spin s) {
    Matrix m = Matrix::Zero(s.dim(), s.dim());
    for (int i = 0; i < s.dim(); ++i)
        m(i, i) = 0.5 * two_m_at(s, i);
    return m;
}

Matrix spin_plus(Spin s) {
    Matrix m = Matrix::Zero(s.dim(), s.dim());
    const double j = s.value();
    for (int i = 1; i < s.dim(); ++i) {
        const double mm = 0.5 * two_m_at(s, i);
        m(i - 1, i) = std::sqrt(j * (j + 1) - mm * (mm + 1));
    }
    return m;
}

Matrix spin_minus(Spin s) { return spin_plus(s).adjoint(); }

Matrix spin_x(Spin s) { return 0.5 * (spin_plus(s) + spin_minus(s)); }

Matrix spin_y(Spin s) { return cplx(0.0, -0.5) * (spin_plus(s) - spin_minus(s)); }

Matrix wigner_D(Spin j, const Rotation& r) {
    // |j,m> <-> x^{j+m} y^{j-m} / sqrt((j+m)!(j-m)!), with x -> a x + c y, y -> b x + d y.
    const auto& u = r.su2();
    const cplx a = u(0, 0), b = u(0, 1), c = u(1, 0), d = u(1, 1);
    const int n = j.two_s();
    Matrix out = Matrix::Zero(j.dim(), j.dim());
    auto ipow = [](cplx z, int k) {
        cplx r = 1.0;
        for (int i = 0; i < k; ++i)
            r *= z;
        return r;
    };
    for (int col = 0; col < j.dim(); ++col) {
        const int p = n - col; // j + m
        const int q = col;     // j - m
        for (int row = 0; row < j.dim(); ++row) {
            const int pp = n - row; // j + m'
            cplx acc = 0.0;
            for (int k = std::max(0, pp - q); k <= std::min(p, pp); ++k) {
                acc += binomial(p, k) * binomial(q, pp - k) * ipow(a, k) * ipow(c, p - k) *
                       ipow(b, pp - k) * ipow(d, q - pp + k);
            }
            out(row, col) = acc * std::sqrt(factorial_ratio({pp, n - pp}, {p, q}));
        }
    }
    return out;
}

Matrix wigner_D(int sigma, const EulerAngles& euler) {
    if (sigma < 0)
        throw InvalidArgument("wigner_D: negative rank");
    return wigner_D(Spin(2 * sigma), euler.rotation());
}

Matrix rotate_operator(const Matrix& op, const Rotation& r) {
    if (op.rows() != op.cols() || op.rows() == 0)
        throw InvalidArgument("rotate_operator: operator must be square and non-empty");
    const Matrix u = wigner_D(Spin(static_cast<int>(op.rows()) - 1), r);
    return u * op * u.adjoint();
}

Vector symmetric_projector_apply(std::span<const Eigen::Vector2cd> kets) {
    if (kets.empty())
        throw InvalidArgument("symmetric_projector_apply: no constituents");
    const int n = static_cast<int>(kets.size());
    // e[d] = sum over subsets of size d of prod(down amplitudes) * prod(up amplitudes of the rest)
    std::vector<cplx> e(static_cast<size_t>(n + 1), 0.0);
    e[0] = 1.0;
    for (int k = 0; k < n; ++k) {
        const cplx up = kets[static_cast<size_t>(k)](0);
        const cplx down = kets[static_cast<size_t>(k)](1);
        for (int dd = k + 1; dd >= 0; --dd) {
            cplx v = up * e[static_cast<size_t>(dd)];
            if (dd > 0)
                v += down * e[static_cast<size_t>(dd - 1)];
            e[static_cast<size_t>(dd)] = v;
        }
    }
    Vector out(n + 1);
    for (int dd = 0; dd <= n; ++dd)
        out(dd) = e[static_cast<size_t>(dd)] / std::sqrt(binomial(n, dd));
    return out;
}

Vector couple_stretched(Spin j1, const Vector& phi, Spin j2, const Vector& chi) {
    if (phi.size() != j1.dim() || chi.size() != j2.dim())
        throw InvalidArgument("couple_stretched: dimension mismatch");
    const Spin j(j1.two_s() + j2.two_s());
    Vector out = Vector::Zero(j.dim());
    for (int a = 0; a < j1.dim(); ++a) {
        for (int b = 0; b < j2.dim(); ++b) {
            const int tm = two_m_at(j1, a) + two_m_at(j2, b);
            out(index_of(j, tm)) += clebsch_gordan(j1.two_s(), two_m_at(j1, a), j2.two_s(),
                                                   two_m_at(j2, b), j.two_s(), tm) *
                                    phi(a) * chi(b);
        }
    }
    return out;
}

Vector antipodal_map(Spin s, const Vector& psi) {
    if (psi.size() != s.dim())
        throw InvalidArgument("antipodal_map: dimension mismatch");
    Vector out(s.dim());
    const int n = s.two_s();
    for (int i = 0; i < s.dim(); ++i) {
        const int tm = two_m_at(s, i);
        out(i) = parity_sign((n + tm) / 2) * std::conj(psi(index_of(s, -tm)));
    }
    return out;
}

Matrix antipodal_conjugate_operator(Spin s, const Matrix& rho) {
    if (rho.rows() != s.dim() || rho.cols() != s.dim())
        throw InvalidArgument("antipodal_conjugate_operator: dimension mismatch");
    // A = Theta K with Theta(m, -m) = (-1)^{s+m}.
    Matrix theta = Matrix::Zero(s.dim(), s.dim());
    for (int i = 0; i < s.dim(); ++i) {
        const int tm = two_m_at(s, i);
        theta(i, index_of(s, -tm)) = parity_sign((s.two_s() + tm) / 2);
    }
    return theta * rho.conjugate() * theta.adjoint();
}

} // namespace spinrep
