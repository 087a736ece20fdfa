#include "lagcap/enumerative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "lagcap/errors.hpp"

namespace lagcap {
namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

void require_positive_weights(std::span<const double> a) {
    for (double w : a)
        if (!(w > 0) || !std::isfinite(w)) throw InputError("weights must be positive and finite");
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

MatrixXcd random_unitary(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
    Eigen::HouseholderQR<MatrixXcd> qr(m);
    return qr.householderQ() * MatrixXcd::Identity(n, n);
}

// After eliminating z_0 with h_1 and setting z' = R (u_1..u_{N-1}, 1), the
// remaining equations h_2..h_N in the N-1 affine unknowns u.
struct ChartSystem {
    std::vector<double> a;
    MatrixXcd r;
    std::vector<MultiPoly> equations;

    VectorXcd lift(const VectorXcd& u) const {
        const int big_n = static_cast<int>(a.size()) - 1;
        VectorXcd w(big_n);
        w.head(big_n - 1) = u;
        w(big_n - 1) = 1.0;
        VectorXcd z(big_n + 1);
        z.tail(big_n) = r * w;
        Complex s = 0.0;
        for (int i = 1; i <= big_n; ++i) s += a[i] * z(i);
        z(0) = -s / a[0];
        return z;
    }
};

ChartSystem build_chart(std::span<const double> a, const MatrixXcd& r) {
    ChartSystem sys{std::vector<double>(a.begin(), a.end()), r, {}};
    const int big_n = static_cast<int>(a.size()) - 1;
    const int m = big_n - 1;
    std::vector<MultiPoly> z(big_n + 1, MultiPoly(m));
    for (int i = 1; i <= big_n; ++i) {
        std::vector<Complex> coeffs(m);
        for (int j = 0; j < m; ++j) coeffs[j] = r(i - 1, j);
        z[i] = MultiPoly::linear(coeffs, r(i - 1, big_n - 1));
    }
    MultiPoly s = MultiPoly::constant(m, 0.0);
    for (int i = 1; i <= big_n; ++i) s = s + z[i] * Complex(a[i]);
    z[0] = s * Complex(-1.0 / a[0]);
    for (int k = 2; k <= big_n; ++k) {
        MultiPoly g = MultiPoly::constant(m, 0.0);
        for (int i = 0; i <= big_n; ++i) g = g + z[i].pow(k) * Complex(a[i]);
        sys.equations.push_back(g);
    }
    return sys;
}

// Coefficients in `var` as numbers, after fixing the other variables to x.
std::vector<Complex> numeric_coefficients(const MultiPoly& p, int var, std::span<const Complex> x) {
    std::vector<Complex> out;
    for (const MultiPoly& c : p.coefficients_in(var)) out.push_back(c.evaluate(x));
    return out;
}

Complex sylvester_resultant(const std::vector<Complex>& f, const std::vector<Complex>& g) {
    const int df = static_cast<int>(f.size()) - 1;
    const int dg = static_cast<int>(g.size()) - 1;
    const int size = df + dg;
    MatrixXcd s = MatrixXcd::Zero(size, size);
    for (int row = 0; row < dg; ++row)
        for (int j = 0; j <= df; ++j) s(row, row + j) = f[df - j];
    for (int row = 0; row < df; ++row)
        for (int j = 0; j <= dg; ++j) s(dg + row, row + j) = g[dg - j];
    return s.determinant();
}

struct Attempt {
    bool ok = false;
    std::vector<VectorXcd> candidates;
};

// Univariate candidates x of the chart system (N-1 <= 2 unknowns).
Attempt chart_candidates(const ChartSystem& sys) {
    Attempt out;
    const int m = static_cast<int>(sys.equations.size());
    const long bezout = factorial(m + 1);
    if (m == 0) {
        out.candidates.push_back(VectorXcd(0));
        out.ok = true;
        return out;
    }
    if (m == 1) {
        const Complex none[1] = {0.0};
        std::vector<Complex> c = numeric_coefficients(sys.equations[0], 0, std::span<const Complex>(none, 1));
        const double scale = std::abs(*std::max_element(c.begin(), c.end(), [](Complex u, Complex v) {
            return std::abs(u) < std::abs(v);
        }));
        if (c.size() != 3 || std::abs(c.back()) < 1e-8 * scale) return out;
        for (Complex root : polynomial_roots(c)) {
            VectorXcd u(1);
            u(0) = root;
            out.candidates.push_back(u);
        }
        out.ok = static_cast<long>(out.candidates.size()) == bezout;
        return out;
    }
    if (m != 2) throw InputError("elimination solver handles at most three projective unknowns");

    const MultiPoly& f = sys.equations[0];
    const MultiPoly& g = sys.equations[1];
    if (f.degree_in(1) != 2 || g.degree_in(1) != 3) return out;
    const Complex lead_f = f.coefficient({0, 2});
    const Complex lead_g = g.coefficient({0, 3});
    if (std::abs(lead_f) < 1e-8 || std::abs(lead_g) < 1e-8) return out;

    // resultant in y sampled on the unit circle, coefficients by inverse DFT
    constexpr int kSamples = 16;
    const int degree = 6;
    std::vector<Complex> values(kSamples);
    for (int s = 0; s < kSamples; ++s) {
        const Complex x = std::polar(1.0, 2.0 * std::numbers::pi * s / kSamples);
        const Complex pt[2] = {x, 0.0};
        values[s] = sylvester_resultant(numeric_coefficients(f, 1, pt), numeric_coefficients(g, 1, pt));
    }
    std::vector<Complex> coeffs(kSamples);
    double scale = 0.0;
    for (int k = 0; k < kSamples; ++k) {
        Complex c = 0.0;
        for (int s = 0; s < kSamples; ++s) c += values[s] * std::polar(1.0, -2.0 * std::numbers::pi * s * k / kSamples);
        coeffs[k] = c / static_cast<double>(kSamples);
        scale = std::max(scale, std::abs(coeffs[k]));
    }
    for (int k = degree + 1; k < kSamples; ++k)
        if (std::abs(coeffs[k]) > 1e-9 * scale) return out;
    if (std::abs(coeffs[degree]) < 1e-8 * scale) return out;
    coeffs.resize(degree + 1);

    for (Complex x : polynomial_roots(coeffs)) {
        const Complex pt[2] = {x, 0.0};
        std::vector<Complex> fy = numeric_coefficients(f, 1, pt);
        Complex best_y = 0.0;
        double best = std::numeric_limits<double>::infinity();
        for (Complex y : polynomial_roots(fy)) {
            const Complex q[2] = {x, y};
            const double r = std::abs(g.evaluate(q));
            if (r < best) {
                best = r;
                best_y = y;
            }
        }
        VectorXcd u(2);
        u << x, best_y;
        out.candidates.push_back(u);
    }
    out.ok = static_cast<long>(out.candidates.size()) == bezout;
    return out;
}

VectorXcd power_values(std::span<const double> a, const VectorXcd& z, int count) {
    VectorXcd h = VectorXcd::Zero(count);
    for (int i = 0; i < z.size(); ++i) {
        Complex zk = 1.0;
        for (int k = 1; k <= count; ++k) {
            zk *= z(i);
            h(k - 1) += a[i] * zk;
        }
    }
    return h;
}

MatrixXcd power_jacobian(std::span<const double> a, const VectorXcd& z, int count) {
    MatrixXcd jac(count, z.size());
    for (int i = 0; i < z.size(); ++i) {
        Complex zk = 1.0;  // z_i^{k-1}
        for (int k = 1; k <= count; ++k) {
            jac(k - 1, i) = static_cast<double>(k) * a[i] * zk;
            zk *= z(i);
        }
    }
    return jac;
}

// Newton on h_1..h_N together with the chart c^T z = 1 fixed at the start point.
VectorXcd newton_polish(std::span<const double> a, VectorXcd z) {
    const int count = static_cast<int>(z.size()) - 1;
    z /= z.norm();
    const VectorXcd c = z.conjugate();
    for (int iter = 0; iter < 40; ++iter) {
        VectorXcd f(count + 1);
        f.head(count) = power_values(a, z, count);
        f(count) = c.cwiseProduct(z).sum() - 1.0;
        MatrixXcd jac(count + 1, z.size());
        jac.topRows(count) = power_jacobian(a, z, count);
        jac.row(count) = c.transpose();
        const VectorXcd step = jac.fullPivLu().solve(f);
        z -= step;
        if (step.norm() < 1e-15 * z.norm()) break;
    }
    return z;
}

bool lex_less(const VectorXcd& u, const VectorXcd& v) {
    constexpr double eps = 1e-9;
    for (int i = 0; i < u.size(); ++i) {
        if (std::abs(u(i).real() - v(i).real()) > eps) return u(i).real() < v(i).real();
        if (std::abs(u(i).imag() - v(i).imag()) > eps) return u(i).imag() < v(i).imag();
    }
    return false;
}

std::string describe(const VectorXcd& z) {
    std::ostringstream os;
    os.precision(12);
    os << "[";
    for (int i = 0; i < z.size(); ++i) os << (i ? ", " : "") << z(i).real() << (z(i).imag() < 0 ? "" : "+") << z(i).imag() << "i";
    os << "]";
    return os.str();
}

void verify_count(const SolutionSet& s, long expected, const SolverOptions& opt, const std::string& what) {
    std::ostringstream os;
    if (static_cast<long>(s.size()) != expected) {
        os << what << ": expected " << expected << " points, found " << s.size();
        throw VerificationFailure(os.str());
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.multiplicities[i] != 1) {
            os << what << ": point " << describe(s.points[i]) << " has multiplicity " << s.multiplicities[i];
            throw VerificationFailure(os.str());
        }
        if (s.residuals[i] >= opt.tau_res) {
            os << what << ": residual " << s.residuals[i] << " at " << describe(s.points[i]);
            throw VerificationFailure(os.str());
        }
        if (s.jacobian_min_sv[i] <= opt.tau_trans) {
            os << what << ": singular Jacobian (sigma_min " << s.jacobian_min_sv[i] << ") at " << describe(s.points[i]);
            throw VerificationFailure(os.str());
        }
    }
}

}  // namespace

std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs) {
    double scale = 0.0;
    for (Complex c : coeffs) scale = std::max(scale, std::abs(c));
    while (!coeffs.empty() && std::abs(coeffs.back()) <= 1e-14 * scale) coeffs.pop_back();
    const int degree = static_cast<int>(coeffs.size()) - 1;
    if (degree < 1) return {};
    MatrixXcd comp = MatrixXcd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < degree; ++i) comp(i, degree - 1) = -coeffs[i] / coeffs[degree];
    Eigen::ComplexEigenSolver<MatrixXcd> es(comp, false);
    std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + degree);
    // a few Newton steps on the original polynomial
    for (Complex& x : roots) {
        for (int it = 0; it < 3; ++it) {
            Complex p = 0.0, dp = 0.0;
            for (int k = degree; k >= 0; --k) {
                dp = dp * x + p;
                p = p * x + coeffs[k];
            }
            if (std::abs(dp) == 0.0) break;
            x -= p / dp;
        }
    }
    return roots;
}

VectorXcd normalize_projective(const VectorXcd& z, double tol) {
    const double nrm = z.norm();
    if (nrm == 0.0) return z;
    VectorXcd u = z / nrm;
    for (int i = 0; i < u.size(); ++i) {
        if (std::abs(u(i)) > tol) {
            u *= std::conj(u(i)) / std::abs(u(i));
            u(i) = std::abs(u(i));
            break;
        }
    }
    return u;
}

double projective_distance(const VectorXcd& u, const VectorXcd& v) {
    // norm of the part of v orthogonal to u; 1 - cos^2 would cancel near 0
    const VectorXcd a = u / u.norm();
    const VectorXcd b = v / v.norm();
    return (b - a * a.dot(b)).norm();
}

SolutionSet solve_projective_power_system(std::span<const double> a, const SolverOptions& opt) {
    const int big_n = static_cast<int>(a.size()) - 1;
    if (big_n < 1 || big_n > 3) throw InputError("projective power system: need 2 to 4 weights");
    require_positive_weights(a);

    for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
        const ChartSystem sys = build_chart(a, random_unitary(big_n, opt.seed + 7919u * attempt));
        const Attempt cand = chart_candidates(sys);
        if (!cand.ok) continue;

        std::vector<VectorXcd> polished;
        bool converged = true;
        for (const VectorXcd& u : cand.candidates) {
            VectorXcd z = normalize_projective(newton_polish(a, sys.lift(u)));
            if (power_values(a, z, big_n).cwiseAbs().maxCoeff() >= opt.tau_res) {
                converged = false;
                break;
            }
            polished.push_back(z);
        }
        if (!converged) continue;

        SolutionSet out;
        for (const VectorXcd& z : polished) {
            bool merged = false;
            for (std::size_t j = 0; j < out.points.size(); ++j) {
                if (projective_distance(z, out.points[j]) < opt.tau_sep) {
                    ++out.multiplicities[j];
                    merged = true;
                    break;
                }
            }
            if (!merged) {
                out.points.push_back(z);
                out.multiplicities.push_back(1);
            }
        }

        std::vector<std::size_t> order(out.points.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t i, std::size_t j) { return lex_less(out.points[i], out.points[j]); });
        SolutionSet sorted;
        for (std::size_t i : order) {
            const VectorXcd& z = out.points[i];
            sorted.points.push_back(z);
            sorted.multiplicities.push_back(out.multiplicities[i]);
            sorted.residuals.push_back(power_values(a, z, big_n).cwiseAbs().maxCoeff());
            Eigen::JacobiSVD<MatrixXcd> svd(power_jacobian(a, z, big_n));
            sorted.jacobian_min_sv.push_back(svd.singularValues()(big_n - 1));
        }
        return sorted;
    }
    throw NumericalDegeneracy("elimination failed to produce a generic projection after repeated coordinate changes");
}

SolutionSet solve_weighted_power_system(std::span<const double> a, const SolverOptions& opt) {
    const int n = static_cast<int>(a.size());
    if (n < 1 || n > 3) throw InputError("weighted power system: need 1 to 3 weights");
    require_positive_weights(a);

    // a nonzero solution spans a line, i.e. a projective solution of h_1..h_{n-1} with h_n = 0
    if (n >= 2) {
        const SolutionSet lines = solve_projective_power_system(a, opt);
        for (const VectorXcd& p : lines.points) {
            const VectorXcd h = power_values(a, p, n);
            if (std::abs(h(n - 1)) < 1e-8) {
                throw VerificationFailure("nontrivial solution of sum a_i z_i^k = 0 (k = 1.." + std::to_string(n) +
                                          "): " + describe(p));
            }
        }
    }
    SolutionSet out;
    const VectorXcd zero = VectorXcd::Zero(n);
    out.points.push_back(zero);
    out.residuals.push_back(0.0);
    Eigen::JacobiSVD<MatrixXcd> svd(power_jacobian(a, zero, n));
    out.jacobian_min_sv.push_back(svd.singularValues()(n - 1));
    // homogeneous of degrees 1..n with no other root, so all n! Bezout roots sit at 0
    out.multiplicities.push_back(factorial(n));
    return out;
}

SolutionSet count_projective_intersections(std::span<const double> a, const SolverOptions& opt) {
    const int n = static_cast<int>(a.size()) - 1;
    if (n < 2 || n > 3) throw InputError("projective intersections: need n+1 weights with 2 <= n <= 3");
    SolutionSet s = solve_projective_power_system(a, opt);
    verify_count(s, factorial(n), opt, "projective intersection count");
    return s;
}

SolutionSet count_tangency_lines(int n, std::span<const double> a, const SolverOptions& opt) {
    if (n < 2 || n > 4) throw InputError("tangency lines: need 2 <= n <= 4");
    if (static_cast<int>(a.size()) != n) throw InputError("tangency lines: need exactly n weights");
    SolutionSet s = solve_projective_power_system(a, opt);
    verify_count(s, factorial(n - 1), opt, "tangency line count");
    return s;
}

double jet_identity_check(const VectorXcd& p, int k, std::span<const double> a) {
    const int n = static_cast<int>(a.size());
    if (p.size() != n) throw InputError("jet identity: p and a must have the same length");
    if (k < 1 || k > n - 1) throw InputError("jet identity: need 1 <= k <= n-1");

    MultiPoly h(n);
    for (int j = 1; j <= n - 1; ++j) h = h + weighted_power_sum(a, j);
    std::vector<MultiPoly> line;
    for (int i = 0; i < n; ++i) line.push_back(MultiPoly::variable(1, 0) * p(i));
    const MultiPoly composed = h.compose(line);

    const double kfact = static_cast<double>(factorial(k));
    const Complex derivative = kfact * composed.coefficient({k});
    Complex hk = 0.0;
    for (int i = 0; i < n; ++i) hk += a[i] * std::pow(p(i), k);
    return std::abs(derivative - kfact * hk);
}

Complex vandermonde(std::span<const Complex> z) {
    Complex v = 1.0;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) v *= z[j] - z[i];
    return v;
}

}  // namespace lagcap
