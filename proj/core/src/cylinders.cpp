#include "lagcap/cylinders.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lagcap/errors.hpp"

namespace lagcap {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// centered first derivative, 8th order
constexpr std::array<double, 4> kStencil = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};

double wrap_angle(double x) {
    double y = std::fmod(x, kTwoPi);
    if (y < 0) y += kTwoPi;
    return y;
}

// representative of x in (-pi, pi]
double wrap_signed(double x) {
    double y = wrap_angle(x + std::numbers::pi) - std::numbers::pi;
    if (y <= -std::numbers::pi) y += kTwoPi;
    return y;
}

struct Stepper {
    int k;
    double c2;  // |pbar'|^2
    const RhoProfile& rho;
    double r_max;

    double rhs(double p1) const { return k * rho(std::sqrt(p1 * p1 + c2)); }

    double rk4(double p, double h) const {
        const double k1 = rhs(p);
        const double k2 = rhs(p + 0.5 * h * k1);
        const double k3 = rhs(p + 0.5 * h * k2);
        const double k4 = rhs(p + h * k3);
        return p + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    }

    // adaptive RK4 with step doubling, from s to s + span
    double advance(double p, double span) const {
        constexpr double tol = 1e-14;
        double done = 0.0;
        const double dir = span > 0 ? 1.0 : -1.0;
        const double total = std::abs(span);
        // step scaled by the local growth rate |p'| / max(1, |p|)
        double h = std::min(total, 0.05 * std::max(1.0, std::abs(p)) / std::max(1e-300, std::abs(rhs(p))));
        while (done < total) {
            h = std::min(h, total - done);
            const double full = rk4(p, dir * h);
            const double half = rk4(rk4(p, dir * h / 2), dir * h / 2);
            const double err = std::abs(half - full) / 15.0;
            const double scale = tol * std::max(1.0, std::abs(half));
            if (err <= scale || h < 1e-12) {
                p = half + (half - full) / 15.0;
                done += h;
                if (!std::isfinite(p) || std::abs(p) > r_max) return p;
                h *= err > 0 ? std::clamp(0.9 * std::pow(scale / err, 0.2), 0.2, 4.0) : 4.0;
            } else {
                h *= std::clamp(0.9 * std::pow(scale / err, 0.2), 0.1, 0.9);
            }
        }
        return p;
    }
};

double rho_at(const CylinderSolution& sol, const RhoProfile& profile, int a, int b) {
    double r2 = 0.0;
    for (int i = 0; i < sol.n; ++i) r2 += sol.p[i](a, b) * sol.p[i](a, b);
    return profile(std::sqrt(r2));
}

}  // namespace

RhoProfile::RhoProfile(Kind kind, double r0, double r1, double r_max)
    : kind_(kind), r0_(r0), r1_(r1), r_max_(r_max) {}

RhoProfile RhoProfile::blended(double r0, double r1, double r_max) {
    if (!(r0 > 0) || !(r1 > r0) || !(r_max > r1)) throw InputError("rho profile: need 0 < r0 < r1 < r_max");
    RhoProfile p(Kind::blended, r0, r1, r_max);
    for (const auto& [r, v] : p.sample(2001, r1))
        if (!(v > 0)) throw InputError("rho profile: blend is not positive on [r0, r1]");
    return p;
}

RhoProfile RhoProfile::constant_one(double r_max) {
    if (!(r_max > 0)) throw InputError("rho profile: r_max must be positive");
    return RhoProfile(Kind::constant_one, 0.0, 0.0, r_max);
}

double RhoProfile::operator()(double r) const {
    if (kind_ == Kind::constant_one || r <= r0_) return 1.0;
    if (r >= r1_) return r;
    // quintic Hermite data (1, 0, 0) at r0 and (r1, 1, 0) at r1
    const double h = r1_ - r0_;
    const double t = (r - r0_) / h;
    const double t3 = t * t * t;
    const double h0 = 1 - 10 * t3 + 15 * t3 * t - 6 * t3 * t * t;
    const double h3 = 10 * t3 - 15 * t3 * t + 6 * t3 * t * t;
    const double h4 = -4 * t3 + 7 * t3 * t - 3 * t3 * t * t;
    return h0 + r1_ * h3 + h * h4;
}

std::vector<std::pair<double, double>> RhoProfile::sample(int count, double r_max_sample) const {
    if (count < 2) throw InputError("rho profile: need at least two samples");
    std::vector<std::pair<double, double>> out;
    for (int i = 0; i < count; ++i) {
        const double r = r_max_sample * i / (count - 1);
        out.emplace_back(r, (*this)(r));
    }
    return out;
}

CylinderSolution integrate_orbit_cylinder(int n, int k, const Eigen::VectorXd& qbar, const Eigen::VectorXd& pbar,
                                          const RhoProfile& profile, double s_max, const CylinderGrid& grid) {
    if (n < 1) throw InputError("cylinder: n must be positive");
    if (k < 1) throw InputError("cylinder: covering degree k must be >= 1");
    if (qbar.size() != n || pbar.size() != n) throw InputError("cylinder: qbar and pbar need n entries");
    if (!(s_max > 0)) throw InputError("cylinder: S must be positive");
    if (grid.s_points < 9 || grid.t_points < 4) throw InputError("cylinder: grid too small");

    CylinderSolution sol;
    sol.n = n;
    sol.k = k;
    sol.s_max = s_max;
    sol.qbar = qbar;
    sol.pbar = pbar;
    for (int a = 0; a < grid.s_points; ++a) sol.s.push_back(-s_max + 2.0 * s_max * a / (grid.s_points - 1));
    for (int b = 0; b < grid.t_points; ++b) sol.t.push_back(kTwoPi * b / grid.t_points);

    const double c2 = pbar.tail(n - 1).squaredNorm();
    const Stepper stepper{k, c2, profile, profile.r_max()};

    std::vector<double> p1(grid.s_points);
    auto sweep = [&](int from, int to, int dir) {
        double s_prev = 0.0;
        double p = pbar(0);
        for (int a = from; a != to; a += dir) {
            p = stepper.advance(p, sol.s[a] - s_prev);
            s_prev = sol.s[a];
            if (!std::isfinite(p) || std::abs(p) > profile.r_max()) {
                std::ostringstream os;
                os << "p_1 left [-" << profile.r_max() << ", " << profile.r_max() << "] near s = " << s_prev
                   << "; attained range ends at " << p << " before reaching S = " << s_max;
                throw TruncationError(os.str());
            }
            p1[a] = p;
        }
    };
    const int first_pos = static_cast<int>(std::lower_bound(sol.s.begin(), sol.s.end(), 0.0) - sol.s.begin());
    sweep(first_pos, grid.s_points, 1);
    sweep(first_pos - 1, -1, -1);

    for (int i = 0; i < n; ++i) {
        sol.q.emplace_back(grid.s_points, grid.t_points);
        sol.p.emplace_back(grid.s_points, grid.t_points);
        for (int a = 0; a < grid.s_points; ++a) {
            for (int b = 0; b < grid.t_points; ++b) {
                sol.q[i](a, b) = i == 0 ? wrap_angle(k * sol.t[b] + qbar(0)) : wrap_angle(qbar(i));
                sol.p[i](a, b) = i == 0 ? p1[a] : pbar(i);
            }
        }
    }
    return sol;
}

double holomorphic_residual(const CylinderSolution& sol, const RhoProfile& profile) {
    const int ns = static_cast<int>(sol.s.size());
    const int nt = static_cast<int>(sol.t.size());
    if (ns < 9 || nt < 9) throw InputError("residual: grid too small for the difference stencil");
    const double hs = sol.s[1] - sol.s[0];
    const double ht = kTwoPi / nt;

    double worst = 0.0;
    for (int a = 4; a < ns - 4; ++a) {
        for (int b = 0; b < nt; ++b) {
            const double rho = rho_at(sol, profile, a, b);
            for (int i = 0; i < sol.n; ++i) {
                const Eigen::MatrixXd& q = sol.q[i];
                const Eigen::MatrixXd& p = sol.p[i];
                // angles are unwrapped along the stencil one grid step at a time, so only
                // neighbouring samples need to be closer than pi
                double qs_span[5] = {0, 0, 0, 0, 0};
                double qt_span[5] = {0, 0, 0, 0, 0};
                for (int m = 1; m <= 4; ++m) {
                    const int bp = (b + m) % nt;
                    const int bm = (b - m + nt) % nt;
                    qs_span[m] = qs_span[m - 1] + wrap_signed(q(a + m, b) - q(a + m - 1, b)) +
                                 wrap_signed(q(a - m + 1, b) - q(a - m, b));
                    qt_span[m] = qt_span[m - 1] + wrap_signed(q(a, bp) - q(a, (bp - 1 + nt) % nt)) +
                                 wrap_signed(q(a, (bm + 1) % nt) - q(a, bm));
                }
                double qs = 0, qt = 0, ps = 0, pt = 0;
                for (int m = 1; m <= 4; ++m) {
                    const double w = kStencil[m - 1];
                    const int bp = (b + m) % nt;
                    const int bm = (b - m + nt) % nt;
                    qs += w * qs_span[m];
                    qt += w * qt_span[m];
                    ps += w * (p(a + m, b) - p(a - m, b));
                    pt += w * (p(a, bp) - p(a, bm));
                }
                qs /= hs;
                ps /= hs;
                qt /= ht;
                pt /= ht;
                worst = std::max(worst, std::abs(qt - ps / rho) + std::abs(qs + pt / rho));
            }
        }
    }
    return worst;
}

double constancy_defect(const CylinderSolution& sol) {
    double worst = 0.0;
    for (int i = 1; i < sol.n; ++i) {
        worst = std::max(worst, (sol.p[i].array() - sol.pbar(i)).abs().maxCoeff());
        for (int a = 0; a < sol.q[i].rows(); ++a)
            for (int b = 0; b < sol.q[i].cols(); ++b)
                worst = std::max(worst, std::abs(wrap_signed(sol.q[i](a, b) - sol.qbar(i))));
    }
    return worst;
}

bool p1_strictly_increasing(const CylinderSolution& sol) {
    for (int a = 1; a < sol.p[0].rows(); ++a)
        for (int b = 0; b < sol.p[0].cols(); ++b)
            if (!(sol.p[0](a, b) > sol.p[0](a - 1, b))) return false;
    return true;
}

int orbit_family_dimension(const CylinderSolution& sol) {
    return static_cast<int>(sol.qbar.tail(sol.n - 1).size() + sol.pbar.tail(sol.n - 1).size());
}

int covering_degree(const CylinderSolution& sol, const Eigen::VectorXd& probe_q, const Eigen::VectorXd& probe_p) {
    if (probe_q.size() != sol.n || probe_p.size() != sol.n) throw InputError("covering degree: probe needs n entries");
    constexpr double tol = 1e-9;
    for (int i = 1; i < sol.n; ++i) {
        if (std::abs(wrap_signed(probe_q(i) - sol.qbar(i))) > tol || std::abs(probe_p(i) - sol.pbar(i)) > tol)
            throw InputError("covering degree: probe is off the (qbar', pbar') slice of this cylinder");
    }
    const Eigen::MatrixXd& p1 = sol.p[0];
    const int ns = static_cast<int>(p1.rows());
    if (!(probe_p(0) >= p1(0, 0) && probe_p(0) < p1(ns - 1, 0)))
        throw InputError("covering degree: probe p_1 is outside the range of the solution");
    int a = 0;
    while (a + 1 < ns && p1(a + 1, 0) <= probe_p(0)) ++a;

    // on row a the t-circle passes through the probe angle once per sign change of wrapped q_1 - probe
    const int nt = static_cast<int>(sol.t.size());
    int count = 0;
    for (int b = 0; b < nt; ++b) {
        const double d0 = wrap_signed(sol.q[0](a, b) - probe_q(0));
        const double d1 = wrap_signed(sol.q[0](a, (b + 1) % nt) - probe_q(0));
        if (std::abs(d1 - d0) < std::numbers::pi && d0 <= 0.0 && d1 > 0.0) ++count;
        if (std::abs(d1 - d0) < std::numbers::pi && d0 >= 0.0 && d1 < 0.0) ++count;
    }
    return count;
}

ActionArea action_area_check(const CylinderSolution& sol, double r_lo, double r_hi) {
    if (!(r_lo <= r_hi)) throw PreconditionError("action/area: need r_lo <= r_hi");
    const int ns = static_cast<int>(sol.s.size());
    const int nt = static_cast<int>(sol.t.size());
    const double c2 = sol.pbar.tail(sol.n - 1).squaredNorm();

    // boundary circle {|p| = e^r} on the positive end, by linear interpolation between rows
    auto circle_integral = [&](double r) {
        const double target = std::exp(r);
        const double target_p1 = std::sqrt(std::max(0.0, target * target - c2));
        if (target * target < c2) throw PreconditionError("action/area: level below |pbar'|, not on the cylinder");
        int a = -1;
        for (int i = 0; i + 1 < ns; ++i)
            if (sol.p[0](i, 0) >= 0 && sol.p[0](i, 0) <= target_p1 && target_p1 <= sol.p[0](i + 1, 0)) a = i;
        if (a < 0) throw PreconditionError("action/area: truncation level outside the solution's range");
        const double lo = sol.p[0](a, 0);
        const double hi = sol.p[0](a + 1, 0);
        const double theta = hi > lo ? (target_p1 - lo) / (hi - lo) : 0.0;

        // trapezoid of sum_i p_i d_t q_i over the periodic t grid
        double integral = 0.0;
        for (int b = 0; b < nt; ++b) {
            const int bn = (b + 1) % nt;
            for (int i = 0; i < sol.n; ++i) {
                auto at = [&](const Eigen::MatrixXd& m, int col) {
                    return (1 - theta) * m(a, col) + theta * m(a + 1, col);
                };
                const double dq = wrap_signed(at(sol.q[i], bn) - at(sol.q[i], b));
                integral += 0.5 * (at(sol.p[i], b) + at(sol.p[i], bn)) * dq;
            }
        }
        return integral;
    };

    ActionArea out;
    const double length = kTwoPi * sol.k;
    out.length_bound = (std::exp(r_hi) - std::exp(r_lo)) * length;
    out.area = r_lo == r_hi ? 0.0 : circle_integral(r_hi) - circle_integral(r_lo);
    if (out.area < out.length_bound * (1.0 - 1e-9) - 1e-12) {
        std::ostringstream os;
        os.precision(12);
        os << "action/area: area " << out.area << " is below the length bound " << out.length_bound;
        throw VerificationFailure(os.str());
    }
    return out;
}

}  // namespace lagcap
