#pragma once
// Reference computations for the tests. Nothing here calls the library code
// paths it is used to check.

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "spinrep/angular.hpp"
#include "spinrep/polynomial.hpp"
#include "spinrep/spin.hpp"
#include "spinrep/states.hpp"

namespace testing {

using spinrep::cplx;
using spinrep::Matrix;
using spinrep::Spin;
using spinrep::Vector;

inline Matrix random_matrix(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            a(i, j) = {g(rng), g(rng)};
    return a;
}

inline Matrix random_hermitian(Spin s, std::mt19937_64& rng) {
    const Matrix a = random_matrix(s.dim(), rng);
    return 0.5 * (a + a.adjoint());
}

/// Random rank, Ginibre-distributed density matrix.
inline Matrix random_density(Spin s, std::mt19937_64& rng) {
    const Matrix a = random_matrix(s.dim(), rng);
    Matrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

inline Vector random_ket(Spin s, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Vector v(s.dim());
    for (int i = 0; i < s.dim(); ++i)
        v(i) = {g(rng), g(rng)};
    return v.normalized();
}

inline spinrep::EulerAngles random_euler(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return {2 * std::numbers::pi * u(rng), std::acos(2 * u(rng) - 1), 2 * std::numbers::pi * u(rng)};
}

inline spinrep::Star random_star(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return {std::acos(2 * u(rng) - 1), 2 * std::numbers::pi * u(rng)};
}

/// Angular momentum matrices built from the ladder matrix elements alone.
struct SpinMatrices {
    Matrix jz, jp, jm;
    explicit SpinMatrices(int two_j) {
        const int d = two_j + 1;
        const double j = 0.5 * two_j;
        jz = Matrix::Zero(d, d);
        jp = Matrix::Zero(d, d);
        for (int i = 0; i < d; ++i) {
            const double m = j - i;
            jz(i, i) = m;
            if (i > 0)
                jp(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
        }
        jm = jp.adjoint();
    }
    Matrix jy() const { return cplx(0, -0.5) * (jp - jm); }
};

/// exp(-i t H) for Hermitian H by eigendecomposition.
inline Matrix expm_hermitian(const Matrix& h, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Vector phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i)
        phases(i) = std::polar(1.0, -t * es.eigenvalues()(i));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// D^{(j)}(alpha, beta, gamma) = exp(-i alpha Jz) exp(-i beta Jy) exp(-i gamma Jz).
inline Matrix wigner_expm(int two_j, double alpha, double beta, double gamma) {
    const SpinMatrices s(two_j);
    return expm_hermitian(s.jz, alpha) * expm_hermitian(s.jy(), beta) * expm_hermitian(s.jz, gamma);
}

/// Clebsch-Gordan table for j1 x j2 by diagonalising within the product basis:
/// highest weights are orthogonal complements of higher multiplets, phases fixed by
/// <j1 j1; j2 J-j1|J J> > 0, and the rest of each multiplet follows by lowering.
class CgTable {
  public:
    CgTable(int two_j1, int two_j2) : j1_(two_j1), j2_(two_j2) {
        const int d1 = j1_ + 1, d2 = j2_ + 1;
        const SpinMatrices a(j1_), b(j2_);
        const Matrix i1 = Matrix::Identity(d1, d1), i2 = Matrix::Identity(d2, d2);
        const Matrix jm = kron(a.jm, i2) + kron(i1, b.jm);
        std::vector<Vector> found; // every multiplet vector constructed so far
        for (int tj = j1_ + j2_; tj >= std::abs(j1_ - j2_); tj -= 2) {
            // M = J subspace: product states with m1 + m2 = J
            Vector top = Vector::Zero(d1 * d2);
            std::vector<int> idx;
            for (int i = 0; i < d1; ++i)
                for (int k = 0; k < d2; ++k)
                    if ((j1_ - 2 * i) + (j2_ - 2 * k) == tj)
                        idx.push_back(i * d2 + k);
            // Gram-Schmidt a candidate against the higher multiplets
            for (int start : idx) {
                Vector v = Vector::Zero(d1 * d2);
                v(start) = 1.0;
                for (const auto& f : found)
                    v -= f.dot(v) * f;
                if (v.norm() > 1e-8) {
                    top = v.normalized();
                    break;
                }
            }
            // phase: component with m1 = j1 positive
            const int k_top = (j1_ + j2_ - tj) / 2; // m1 = j1, m2 = J - j1
            top *= std::abs(top(k_top)) / top(k_top);
            Vector cur = top;
            for (int tm = tj; tm >= -tj; tm -= 2) {
                found.push_back(cur);
                for (int i = 0; i < d1; ++i)
                    for (int k = 0; k < d2; ++k)
                        table_[{j1_ - 2 * i, j2_ - 2 * k, tj, tm}] = cur(i * d2 + k).real();
                if (tm > -tj) {
                    const double jj = 0.5 * tj, mm = 0.5 * tm;
                    cur = jm * cur / std::sqrt(jj * (jj + 1) - mm * (mm - 1));
                }
            }
        }
    }
    double operator()(int tm1, int tm2, int tj, int tm) const {
        auto it = table_.find({tm1, tm2, tj, tm});
        return it == table_.end() ? 0.0 : it->second;
    }

  private:
    static Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            for (Eigen::Index j = 0; j < a.cols(); ++j)
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        return out;
    }
    int j1_, j2_;
    std::map<std::array<int, 4>, double> table_;
};

/// Sparse polynomial in (z1, z2, zb1, zb2), exponents as a 4-array.
struct SymPoly {
    std::map<std::array<int, 4>, cplx> terms;

    static SymPoly from(const spinrep::MajoranaPoly& p) {
        SymPoly out;
        const int n = p.degree();
        for (int a = 0; a <= n; ++a)
            for (int g = 0; g <= n; ++g)
                if (p.coeffs(a, g) != 0.0)
                    out.terms[{a, n - a, g, n - g}] = p.coeffs(a, g);
        return out;
    }

    /// p(z_a, d_a) applied to q: the barred variables of p become derivatives in z.
    SymPoly act_on(const SymPoly& q) const {
        SymPoly out;
        for (const auto& [e, c] : terms)
            for (const auto& [f, d] : q.terms) {
                if (f[0] < e[2] || f[1] < e[3])
                    continue;
                double fall = 1.0;
                for (int i = 0; i < e[2]; ++i)
                    fall *= f[0] - i;
                for (int i = 0; i < e[3]; ++i)
                    fall *= f[1] - i;
                out.terms[{f[0] - e[2] + e[0], f[1] - e[3] + e[1], f[2], f[3]}] += c * d * fall;
            }
        return out;
    }

    spinrep::MajoranaPoly to_majorana(int n) const {
        spinrep::MajoranaPoly p = spinrep::MajoranaPoly::zero(Spin(n));
        for (const auto& [e, c] : terms) {
            if (e[0] + e[1] != n || e[2] + e[3] != n)
                throw std::logic_error("SymPoly: not bihomogeneous of degree n");
            p.coeffs(e[0], e[2]) += c;
        }
        return p;
    }
};

/// Polynomial of an operator straight from <-n_B(z)|C|-n_B(z)>, with the BSC
/// components (-1)^{s-m} sqrt(C(2s, s-m)) z1^{s+m} z2^{s-m}.
inline spinrep::MajoranaPoly poly_by_definition(const Matrix& c) {
    const int n = static_cast<int>(c.rows()) - 1;
    spinrep::MajoranaPoly p = spinrep::MajoranaPoly::zero(Spin(n));
    auto bsc = [&](int i) { return ((i % 2) ? -1.0 : 1.0) * std::sqrt(spinrep::binomial(n, i)); };
    for (int i = 0; i < n + 1; ++i)     // row m = s - i, monomial z1^{n-i}
        for (int k = 0; k < n + 1; ++k) // column m'
            p.coeffs(n - i, n - k) += bsc(i) * bsc(k) * c(i, k);
    return p;
}

} // namespace testing
