#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace spinrep {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Base of all library errors. The CLI maps the subclasses onto exit codes.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments or input files.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Well-formed input that violates a physical constraint (non-Hermitian, not a state).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A numerical procedure (root finding, antipodal pairing, class extraction) broke down.
class NumericalError : public Error {
  public:
    using Error::Error;
};

/// Spin quantum number stored doubled, so that half-integer spins are exact.
/// `two_s` is also the number N of spin-1/2 constituents.
class Spin {
  public:
    constexpr Spin() = default;
    constexpr explicit Spin(int two_s) : two_s_(two_s) {
        if (two_s < 0)
            throw InvalidArgument("spin: two_s must be non-negative");
    }

    constexpr int two_s() const { return two_s_; }
    constexpr int dim() const { return two_s_ + 1; }
    constexpr double value() const { return 0.5 * two_s_; }
    constexpr bool is_integer() const { return two_s_ % 2 == 0; }

    /// Spin of the state left after tracing out `k` constituents.
    Spin reduced(int k) const;

    /// Parses "3/2", "1", "2/2". Denominator must be 1 or 2.
    static Spin parse(std::string_view text);
    std::string to_string() const;

    friend constexpr bool operator==(Spin, Spin) = default;

  private:
    int two_s_ = 0;
};

/// Parses a possibly half-integer number "p/q" (q in {1, 2}) into its doubled value.
int parse_doubled(std::string_view text);

/// Row/column index of magnetic number m (given doubled) in a spin-s matrix;
/// rows run m = s, s-1, ..., -s.
inline int index_of(Spin s, int two_m) { return (s.two_s() - two_m) / 2; }
/// Doubled magnetic number at row `i`.
inline int two_m_at(Spin s, int i) { return s.two_s() - 2 * i; }

/// n! as a double. Exact up to 22!, correctly rounded products beyond.
double factorial(int n);
/// log(n!)
double log_factorial(int n);
/// Binomial coefficient as a double (exact while it fits in 53 bits).
double binomial(int n, int k);

/// Product of factorial ratios prod(num[i]!) / prod(den[i]!), evaluated by direct
/// products when every argument is at most 15, through log-factorials otherwise.
double factorial_ratio(std::initializer_list<int> num, std::initializer_list<int> den);

/// (-1)^k for any integer k.
constexpr double parity_sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Max entry of |A - A^dagger|.
double hermiticity_residual(const Matrix& a);

} // namespace spinrep
