#include "spinrep/spin.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace spinrep {

Spin Spin::reduced(int k) const {
    if (k < 0 || k > two_s_)
        throw InvalidArgument("cannot trace out " + std::to_string(k) + " constituents of spin " +
                              to_string());
    return Spin(two_s_ - k);
}

namespace {

int parse_int(std::string_view text) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw InvalidArgument("not an integer: '" + std::string(text) + "'");
    return v;
}

} // namespace

int parse_doubled(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return 2 * parse_int(text);
    int num = parse_int(text.substr(0, slash));
    int den = parse_int(text.substr(slash + 1));
    if (den == 1)
        return 2 * num;
    if (den == 2)
        return num;
    throw InvalidArgument("denominator must be 1 or 2: '" + std::string(text) + "'");
}

Spin Spin::parse(std::string_view text) {
    int two_s = parse_doubled(text);
    if (two_s < 0)
        throw InvalidArgument("spin must be non-negative: '" + std::string(text) + "'");
    return Spin(two_s);
}

std::string Spin::to_string() const {
    if (is_integer())
        return std::to_string(two_s_ / 2);
    return std::to_string(two_s_) + "/2";
}

double factorial(int n) {
    if (n < 0)
        throw InvalidArgument("factorial of negative number");
    static const std::array<double, 171> table = [] {
        std::array<double, 171> t{};
        t[0] = 1.0;
        for (int i = 1; i < 171; ++i)
            t[i] = t[i - 1] * i;
        return t;
    }();
    if (n > 170)
        return HUGE_VAL;
    return table[n];
}

double log_factorial(int n) {
    if (n < 0)
        throw InvalidArgument("factorial of negative number");
    return std::lgamma(n + 1.0);
}

double binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r < 9.0e15 ? std::round(r) : r;
}

double factorial_ratio(std::initializer_list<int> num, std::initializer_list<int> den) {
    bool small = true;
    for (int v : num)
        small = small && v <= 15;
    for (int v : den)
        small = small && v <= 15;
    if (small) {
        double n = 1.0, d = 1.0;
        for (int v : num)
            n *= factorial(v);
        for (int v : den)
            d *= factorial(v);
        return n / d;
    }
    double acc = 0.0;
    for (int v : num)
        acc += log_factorial(v);
    for (int v : den)
        acc -= log_factorial(v);
    return std::exp(acc);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InvalidArgument("dimension mismatch");
    if (a.size() == 0)
        return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

double hermiticity_residual(const Matrix& a) {
    if (a.rows() != a.cols())
        throw InvalidArgument("matrix is not square");
    if (a.size() == 0)
        return 0.0;
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

} // namespace spinrep
