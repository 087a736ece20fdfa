#include "lagcap/capacities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "lagcap/errors.hpp"

namespace lagcap {
namespace {

constexpr double kPi = std::numbers::pi;
using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

std::string to_string(DomainKind kind) {
    switch (kind) {
        case DomainKind::ball: return "ball";
        case DomainKind::cylinder: return "cylinder";
        case DomainKind::polydisk: return "polydisk";
        case DomainKind::ellipsoid: return "ellipsoid";
        case DomainKind::standard_torus: return "standard_torus";
    }
    return "?";
}

DomainKind domain_kind_from_string(const std::string& name) {
    for (DomainKind k : {DomainKind::ball, DomainKind::cylinder, DomainKind::polydisk, DomainKind::ellipsoid,
                         DomainKind::standard_torus})
        if (to_string(k) == name) return k;
    throw InputError("unknown domain kind '" + name + "'");
}

std::string to_string(CapacityStatus status) {
    switch (status) {
        case CapacityStatus::proved: return "proved";
        case CapacityStatus::conjectural: return "conjectural";
        case CapacityStatus::unknown: return "unknown";
    }
    return "?";
}

Domain Domain::ball(int n, double r) { return {DomainKind::ball, n, r, {}}; }
Domain Domain::cylinder(int n, double r) { return {DomainKind::cylinder, n, r, {}}; }
Domain Domain::polydisk(int n, double r) { return {DomainKind::polydisk, n, r, {}}; }
Domain Domain::standard_torus(int n, double r) { return {DomainKind::standard_torus, n, r, {}}; }
Domain Domain::ellipsoid(std::vector<double> axes) {
    Domain d{DomainKind::ellipsoid, static_cast<int>(axes.size()), 0.0, std::move(axes)};
    return d;
}

void Domain::validate() const {
    if (n < 1) throw InputError("domain: n must be positive");
    if (kind == DomainKind::ellipsoid) {
        if (static_cast<int>(axes.size()) != n) throw InputError("ellipsoid: need exactly n axes");
        if (std::any_of(axes.begin(), axes.end(), [](double a) { return !(a > 0); }))
            throw InputError("ellipsoid: axes must be positive");
        if (!std::is_sorted(axes.begin(), axes.end())) throw InputError("ellipsoid: axes must be sorted ascending");
    } else if (!(radius > 0)) {
        throw InputError("domain: radius must be positive");
    }
}

CapacityValue lagrangian_capacity(const Domain& d) {
    d.validate();
    const double area = kPi * d.radius * d.radius;
    switch (d.kind) {
        case DomainKind::ball:
            return {area / d.n, CapacityStatus::proved, area / d.n, "Cor. cap"};
        case DomainKind::cylinder:
            return {area, CapacityStatus::proved, area, "c_L(Z(1)) = pi"};
        case DomainKind::polydisk:
            return {area, CapacityStatus::proved, area, "c_L(P(r)) = pi r^2"};
        case DomainKind::ellipsoid: {
            double inv = 0.0;
            for (double a : d.axes) inv += 1.0 / a;
            // T^n(r) with r^2 < 1/sum(1/a_i) lies in E, so the conjectured value is a lower bound
            return {kPi / inv, CapacityStatus::conjectural, kPi / inv, "Conjecture (ellipsoid)"};
        }
        case DomainKind::standard_torus:
            break;
    }
    throw InputError("lagrangian capacity is defined for domains, not for the torus itself; use a_min");
}

CapacityValue lagrangian_capacity_all_lagrangians(const Domain& d) {
    d.validate();
    if (d.kind != DomainKind::ball) throw InputError("all-Lagrangian variant is only tabulated for balls");
    const double lower = kPi * d.radius * d.radius / d.n;
    if (d.n <= 2) return {lower, CapacityStatus::proved, lower, "Remark (all closed Lagrangians), n <= 2"};
    return {std::numeric_limits<double>::quiet_NaN(), CapacityStatus::unknown, lower,
            "Remark (all closed Lagrangians), n > 2 open"};
}

double a_min_standard_torus(double r) {
    if (!(r > 0)) throw InputError("torus radius must be positive");
    return kPi * r * r;
}

bool polydisk_embeds_ball(int n, double r) {
    if (n < 1 || !(r > 0)) throw InputError("polydisk embedding: need n >= 1 and r > 0");
    // compare r^2 <= 1/n to keep the equality cases exact
    return r * r * n <= 1.0;
}

CapacityValue chord_bound(const Domain& d) {
    if (d.kind != DomainKind::ball && d.kind != DomainKind::ellipsoid)
        throw InputError("chord bound needs a star-shaped domain (ball or ellipsoid), got " + to_string(d.kind));
    CapacityValue v = lagrangian_capacity(d);
    v.citation = d.kind == DomainKind::ball ? "Cor. chord-sphere" : "Cor. chord + Conjecture (ellipsoid)";
    return v;
}

MetricSpec MetricSpec::flat_torus(int n) {
    return {n, 2.0 * kPi, std::pow(2.0 * kPi, n)};
}

double unit_ball_volume(int k) {
    if (k < 0) throw InputError("ball dimension must be nonnegative");
    return std::pow(kPi, 0.5 * k) / std::tgamma(0.5 * k + 1.0);
}

WeinsteinBounds weinstein_bounds(const MetricSpec& m, int n_target) {
    if (m.n < 1 || !(m.ell_min > 0) || !(m.volume > 0)) throw InputError("metric spec: need n >= 1, l_min > 0, vol > 0");
    if (n_target != m.n) throw InputError("embedding target CP^n must have n = dim Q");
    WeinsteinBounds w;
    w.geodesic_bound = (m.n + 1) * m.ell_min / kPi;
    // vol CP^n = vol B^{2n}(1) = pi^n / n!
    const double vol_cpn = unit_ball_volume(2 * m.n);
    w.volume_bound = std::pow(m.volume * unit_ball_volume(m.n) / vol_cpn, 1.0 / m.n);
    w.best = std::max(w.geodesic_bound, w.volume_bound);
    return w;
}

double flat_torus_volume_constant(int n) {
    if (n < 1) throw InputError("C_n needs n >= 1");
    const BigFloat pi = boost::math::constants::pi<BigFloat>();
    if (n % 2 == 0) {
        const int k = n / 2;
        const BigFloat ratio = BigFloat(factorial(2 * k)) / BigFloat(factorial(k));
        const BigFloat c = 2 * sqrt(pi) * pow(ratio, BigFloat(1) / (2 * k));
        return static_cast<double>(c);
    }
    const int k = (n - 1) / 2;
    const BigFloat base = pow(pi, k) * BigFloat(factorial(k));
    const BigFloat c = 4 * pow(base, BigFloat(1) / (2 * k + 1));
    return static_cast<double>(c);
}

double flat_torus_max_norm_squared(int n) {
    if (n < 1) throw InputError("flat torus bound needs n >= 1");
    // linear objective on the unit ball: maximizer s = (1,...,1)/sqrt(n)
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    double total = 0.0;
    for (int j = 0; j < n; ++j) total += 2.0 + 2.0 * s;
    return total;
}

double flat_torus_upper_bound(int n) {
    if (n < 1) throw InputError("flat torus bound needs n >= 1");
    const double closed = 2.0 * (n + std::sqrt(static_cast<double>(n)));
    const double derived = flat_torus_max_norm_squared(n);
    if (std::abs(closed - derived) > 1e-12 * closed) {
        std::ostringstream os;
        os << "max |z|^2 = " << derived << " disagrees with 2(n + sqrt n) = " << closed;
        throw VerificationFailure(os.str());
    }
    return closed;
}

}  // namespace lagcap
