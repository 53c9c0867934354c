#include "spinrep/io.hpp"

#include <istream>

namespace spinrep {

namespace {

template <class T>
T get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InvalidArgument(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("field '") + key + "': " + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InvalidArgument(std::string("missing field '") + key + "'");
    return j.at(key);
}

cplx complex_from_json(const json& e) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw InvalidArgument("complex entries must be [re, im] pairs");
    return {e[0].get<double>(), e[1].get<double>()};
}

} // namespace

json state_to_json(const Matrix& rho) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < rho.rows(); ++i)
        for (Eigen::Index k = 0; k < rho.cols(); ++k)
            entries.push_back({rho(i, k).real(), rho(i, k).imag()});
    return {{"two_s", rho.rows() - 1}, {"matrix", entries}};
}

Matrix state_from_json(const json& j, double herm_tol) {
    const int n = get_field<int>(j, "two_s");
    if (n < 0)
        throw InvalidArgument("two_s must be non-negative");
    const json& entries = field(j, "matrix");
    const auto dim = static_cast<size_t>(n + 1);
    if (!entries.is_array() || entries.size() != dim * dim)
        throw InvalidArgument("matrix must hold (two_s + 1)^2 = " + std::to_string(dim * dim) + " entries");
    Matrix rho(n + 1, n + 1);
    for (size_t i = 0; i < dim; ++i)
        for (size_t k = 0; k < dim; ++k)
            rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = complex_from_json(entries[i * dim + k]);
    if (herm_tol >= 0) {
        const double r = hermiticity_residual(rho);
        if (r > herm_tol)
            throw ValidationError("operator is not Hermitian (residual " + std::to_string(r) + ")");
    }
    return rho;
}

json class_to_json(const SubconstellationClass& cls) {
    json stars = json::array(), pairs = json::array(), reps = json::array();
    for (const auto& s : cls.stars)
        stars.push_back({{"theta", s.theta}, {"phi", s.phi}});
    for (const auto& p : cls.pairs()) {
        pairs.push_back({p[0], p[1]});
        reps.push_back(p[0]);
    }
    return {{"sigma", cls.sigma}, {"stars", stars}, {"pairs", pairs}, {"representative", reps}, {"parity", cls.parity}};
}

SubconstellationClass class_from_json(const json& j) {
    const int sigma = get_field<int>(j, "sigma");
    const int parity = get_field<int>(j, "parity");
    const json& stars_j = field(j, "stars");
    if (sigma < 1 || !stars_j.is_array() || stars_j.size() != static_cast<size_t>(2 * sigma))
        throw InvalidArgument("constellation must hold 2 sigma stars");
    std::vector<Star> stars;
    for (const auto& s : stars_j)
        stars.push_back({get_field<double>(s, "theta"), get_field<double>(s, "phi")});
    const auto pairs = get_field<std::vector<std::array<int, 2>>>(j, "pairs");
    const auto reps = get_field<std::vector<int>>(j, "representative");
    if (pairs.size() != static_cast<size_t>(sigma) || reps.size() != static_cast<size_t>(sigma))
        throw InvalidArgument("constellation must have sigma pairs and sigma representatives");
    std::vector<int> seen(static_cast<size_t>(2 * sigma), 0);
    std::vector<Star> tuple;
    for (size_t k = 0; k < pairs.size(); ++k) {
        const auto [a, b] = pairs[k];
        if (a < 0 || b < 0 || a >= 2 * sigma || b >= 2 * sigma || a == b)
            throw InvalidArgument("pair index out of range");
        ++seen[static_cast<size_t>(a)];
        ++seen[static_cast<size_t>(b)];
        if (angular_distance(stars[static_cast<size_t>(a)], stars[static_cast<size_t>(b)].antipode()) > 1e-6)
            throw InvalidArgument("paired stars are not antipodal");
        const int r = reps[k];
        if (r != a && r != b)
            throw InvalidArgument("representative " + std::to_string(r) + " is not a member of pair " + std::to_string(k));
        tuple.push_back(stars[static_cast<size_t>(r)]);
    }
    for (int c : seen)
        if (c != 1)
            throw InvalidArgument("pairs must partition the stars");
    return make_class(tuple, parity);
}

json trep_to_json(const TRep& t) {
    json blocks = json::array();
    for (const auto& b : t.blocks)
        blocks.push_back({{"sigma", b.sigma}, {"w", b.w}, {"constellation", class_to_json(b.cls)}});
    return {{"two_s", t.spin.two_s()}, {"trace_component", t.trace_component}, {"blocks", blocks}};
}

TRep trep_from_json(const json& j) {
    const int n = get_field<int>(j, "two_s");
    if (n < 0)
        throw InvalidArgument("two_s must be non-negative");
    TRep t{Spin(n), get_field<double>(j, "trace_component"), {}};
    int last = 0;
    const json& blocks = field(j, "blocks");
    if (!blocks.is_array())
        throw InvalidArgument("blocks must be a list");
    for (const auto& b : blocks) {
        const int sigma = get_field<int>(b, "sigma");
        if (sigma <= last || sigma > n)
            throw InvalidArgument("blocks must have increasing sigma in [1, two_s]");
        last = sigma;
        const double w = get_field<double>(b, "w");
        if (!(w > 0))
            throw InvalidArgument("block radius must be positive");
        SubconstellationClass cls = class_from_json(field(b, "constellation"));
        if (cls.sigma != sigma)
            throw InvalidArgument("constellation sigma does not match its block");
        t.blocks.push_back({sigma, w, std::move(cls)});
    }
    return t;
}

json srep_to_json(const SRepVector& s) {
    json out = json::array();
    for (const auto& [nu, c] : s.coeffs)
        out.push_back({{"nu", {nu.nu0, nu.nu_minus, nu.nu_z, nu.nu_plus}}, {"re", c.real()}, {"im", c.imag()}});
    return out;
}

SRepVector srep_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw InvalidArgument("S-rep must be a non-empty list");
    SRepVector out;
    int n = -1;
    for (const auto& e : j) {
        const auto nu = get_field<std::array<int, 4>>(e, "nu");
        const NuIndex idx{nu[0], nu[1], nu[2], nu[3]};
        if (nu[0] < 0 || nu[1] < 0 || nu[2] < 0 || nu[3] < 0)
            throw InvalidArgument("negative nu entry");
        if (n < 0)
            n = idx.total();
        else if (idx.total() != n)
            throw InvalidArgument("nu indices have different totals");
        out.coeffs[idx] = {get_field<double>(e, "re"), get_field<double>(e, "im")};
    }
    out.spin = Spin(n);
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(std::istream& is) {
    try {
        return json::parse(is);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace spinrep
