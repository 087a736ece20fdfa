#include "lagcap/symplectic_index.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace lagcap {
namespace {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Eigenvalue angles of the Souriau unitary below this are crossings; between
// this and kAmbiguousAngle nothing can be decided from the samples.
constexpr double kZeroAngle = 1e-8;
constexpr double kAmbiguousAngle = 1e-6;
// Consecutive samples must move arg det W by less than this.
constexpr double kMaxPhaseStep = kPi / 2;

double symplectic_defect(const Matrix& m) {
    const int n = static_cast<int>(m.rows()) / 2;
    const Matrix j = standard_j(n);
    return (m.transpose() * j * m - j).cwiseAbs().maxCoeff();
}

double scaled_tol(const Matrix& m, double tol) {
    const double norm = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
    return tol * std::max(1.0, norm * norm);
}

Matrix symplectic_inverse(const Matrix& m) {
    const Matrix j = standard_j(static_cast<int>(m.rows()) / 2);
    return -j * m.transpose() * j;
}

// Unitary U = X - iY for an orthonormalized Lagrangian frame [X; Y].
CMatrix unitary_frame(const Matrix& frame) {
    const Eigen::Index rows = frame.rows();
    const Eigen::Index cols = frame.cols();
    Eigen::HouseholderQR<Matrix> qr(frame);
    const Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
    const Eigen::Index n = rows / 2;
    CMatrix u(n, cols);
    u.real() = q.topRows(n);
    u.imag() = -q.bottomRows(n);
    return u;
}

// Lagrangian frame of graph(Psi) in R^{2n} x R^{2n} with form (-w) + w, moved
// to the standard form by p_x -> -p_x. Coordinates (q_x, q_y, p_x, p_y).
Matrix graph_frame(const Matrix& psi) {
    const Eigen::Index n = psi.rows() / 2;
    const Eigen::Index m = 2 * n;
    Matrix z = Matrix::Zero(2 * m, m);
    const Matrix id = Matrix::Identity(m, m);
    z.block(0, 0, n, m) = id.topRows(n);
    z.block(n, 0, n, m) = psi.topRows(n);
    z.block(m, 0, n, m) = -id.bottomRows(n);
    z.block(m + n, 0, n, m) = psi.bottomRows(n);
    return z;
}

struct SouriauSample {
    Complex det;
    std::vector<double> angles;  // in (-pi, pi]
};

SouriauSample souriau(const CMatrix& base_adjoint, const Matrix& graph, bool want_angles) {
    const CMatrix a = base_adjoint * unitary_frame(graph);
    const CMatrix w = a * a.transpose();
    SouriauSample s;
    const Complex da = a.determinant();
    s.det = da * da;
    if (want_angles) {
        Eigen::ComplexEigenSolver<CMatrix> es(w, false);
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            s.angles.push_back(std::arg(es.eigenvalues()(i)));
    }
    return s;
}

// Sum over eigenvalues of the angle measured counterclockwise from exp(i*0^+)
// (upper = true) or from exp(i*0^-) (upper = false), in [0, 2 pi].
double offset_angle_sum(const std::vector<double>& angles, bool upper) {
    double sum = 0.0;
    for (double theta : angles) {
        const double a = std::abs(theta);
        if (a <= kZeroAngle) {
            sum += upper ? kTwoPi : 0.0;
            continue;
        }
        if (a < kAmbiguousAngle) {
            std::ostringstream os;
            os << "unresolvable crossing: eigenvalue angle " << theta
               << " is neither a crossing nor separated from one";
            throw NumericalDegeneracy(os.str());
        }
        sum += theta > 0 ? theta : theta + kTwoPi;
    }
    return sum;
}

double accumulated_phase(const std::vector<Complex>& dets) {
    double total = 0.0;
    for (std::size_t i = 1; i < dets.size(); ++i) {
        const double step = std::arg(dets[i] / dets[i - 1]);
        if (std::abs(step) > kMaxPhaseStep) {
            std::ostringstream os;
            os << "insufficient resolution: phase jump " << step << " between samples " << i - 1
               << " and " << i;
            throw NumericalDegeneracy(os.str());
        }
        total += step;
    }
    return total;
}

}  // namespace

Matrix standard_j(int n) {
    Matrix j = Matrix::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n).setIdentity();
    j.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
    return j;
}

bool check_symplectic(const Matrix& m, double tol) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw InputError("symplectic check needs a square matrix of even size");
    return symplectic_defect(m) <= tol;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    const Eigen::Index na = a.rows() / 2;
    const Eigen::Index nb = b.rows() / 2;
    const Eigen::Index n = na + nb;
    Matrix out = Matrix::Zero(2 * n, 2 * n);
    // a occupies indices {0..na-1} U {n..n+na-1}, b the rest
    for (int bi = 0; bi < 2; ++bi) {
        for (int bj = 0; bj < 2; ++bj) {
            out.block(bi * n, bj * n, na, na) = a.block(bi * na, bj * na, na, na);
            out.block(bi * n + na, bj * n + na, nb, nb) = b.block(bi * nb, bj * nb, nb, nb);
        }
    }
    return out;
}

Matrix plane_rotation(int n, int j, double theta) {
    Matrix r = Matrix::Identity(2 * n, 2 * n);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    // exp(theta J0) on (q, p) = [[c, s], [-s, c]]
    r(j, j) = c;
    r(j, n + j) = s;
    r(n + j, j) = -s;
    r(n + j, n + j) = c;
    return r;
}

SymplecticPath::SymplecticPath(int n, std::vector<double> times, std::vector<Matrix> matrices)
    : n_(n), times_(std::move(times)), matrices_(std::move(matrices)) {
    if (n < 0) throw InputError("symplectic path: negative half-dimension");
    if (times_.size() != matrices_.size()) throw InputError("symplectic path: times/matrices size mismatch");
    if (times_.size() < 2) throw InputError("symplectic path: need at least two samples");
    if (times_.front() != 0.0 || times_.back() != 1.0)
        throw InputError("symplectic path: times must run from 0 to 1");
    for (std::size_t i = 1; i < times_.size(); ++i)
        if (!(times_[i] > times_[i - 1])) throw InputError("symplectic path: times must increase strictly");
    for (std::size_t i = 0; i < matrices_.size(); ++i) {
        const Matrix& m = matrices_[i];
        if (m.rows() != 2 * n || m.cols() != 2 * n) {
            std::ostringstream os;
            os << "symplectic path: sample " << i << " is " << m.rows() << "x" << m.cols() << ", expected "
               << 2 * n << "x" << 2 * n;
            throw InputError(os.str());
        }
        if (n > 0 && symplectic_defect(m) > scaled_tol(m, kSymplecticTol)) {
            std::ostringstream os;
            os << "symplectic path: sample " << i << " is not symplectic (defect " << symplectic_defect(m) << ")";
            throw InputError(os.str());
        }
    }
    if (n > 0) {
        const Matrix id = Matrix::Identity(2 * n, 2 * n);
        if ((matrices_.front() - id).cwiseAbs().maxCoeff() > 1e-12)
            throw InputError("symplectic path: Psi(0) must be the identity");
        matrices_.front() = id;
    }
}

SymplecticPath SymplecticPath::sample(int n, const std::function<Matrix(double)>& f, int samples) {
    if (samples < 2) throw InputError("symplectic path: need at least two samples");
    std::vector<double> times(samples);
    std::vector<Matrix> mats(samples);
    for (int i = 0; i < samples; ++i) {
        times[i] = i == samples - 1 ? 1.0 : static_cast<double>(i) / (samples - 1);
        mats[i] = f(times[i]);
    }
    return {n, std::move(times), std::move(mats)};
}

Matrix symplectic_midpoint(const Matrix& a, const Matrix& b) {
    if (a.size() == 0) return a;
    const Matrix m = symplectic_inverse(a) * b;
    Eigen::SelfAdjointEigenSolver<Matrix> es(m * m.transpose());
    const Eigen::VectorXd lam = es.eigenvalues();
    const Matrix& v = es.eigenvectors();
    const Matrix p_inv = v * lam.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose();
    const Matrix p_half = v * lam.cwiseSqrt().cwiseSqrt().asDiagonal() * v.transpose();
    const Matrix o = p_inv * m;

    const Eigen::Index n = a.rows() / 2;
    CMatrix c(n, n);
    c.real() = o.topLeftCorner(n, n);
    c.imag() = o.topRightCorner(n, n);
    Eigen::ComplexEigenSolver<CMatrix> ces(c, false);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(std::arg(ces.eigenvalues()(i))) > 0.9 * kPi)
            throw NumericalDegeneracy("samples too far apart for geodesic interpolation");
    }
    const CMatrix c_half = c.sqrt();
    Matrix o_half(2 * n, 2 * n);
    o_half.topLeftCorner(n, n) = c_half.real();
    o_half.topRightCorner(n, n) = c_half.imag();
    o_half.bottomLeftCorner(n, n) = -c_half.imag();
    o_half.bottomRightCorner(n, n) = c_half.real();
    return a * p_half * o_half;
}

SymplecticPath refine(const SymplecticPath& path) {
    std::vector<double> times;
    std::vector<Matrix> mats;
    times.reserve(2 * path.size() - 1);
    mats.reserve(2 * path.size() - 1);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0) {
            times.push_back(0.5 * (path.time(i - 1) + path.time(i)));
            mats.push_back(symplectic_midpoint(path.matrix(i - 1), path.matrix(i)));
        }
        times.push_back(path.time(i));
        mats.push_back(path.matrix(i));
    }
    return {path.n(), std::move(times), std::move(mats)};
}

SymplecticPath direct_sum(const SymplecticPath& a, const SymplecticPath& b) {
    if (a.times() != b.times()) throw InputError("direct sum: paths must share sample times");
    std::vector<Matrix> mats;
    mats.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mats.push_back(direct_sum(a.matrix(i), b.matrix(i)));
    return {a.n() + b.n(), a.times(), std::move(mats)};
}

SymplecticPath prepend_rotation_loop(const SymplecticPath& path, int j) {
    if (j < 0 || j >= path.n()) throw InputError("rotation loop: plane index out of range");
    std::vector<Matrix> mats;
    mats.reserve(path.size());
    for (std::size_t i = 0; i < path.size(); ++i)
        mats.push_back(plane_rotation(path.n(), j, kTwoPi * path.time(i)) * path.matrix(i));
    mats.back() = path.endpoint();
    return {path.n(), path.times(), std::move(mats)};
}

SymplecticPath change_trivialization(const SymplecticPath& path, const std::vector<Matrix>& frame) {
    if (frame.size() != path.size()) throw InputError("trivialization: frame must match path samples");
    const Matrix phi0_inv = symplectic_inverse(frame.front());
    std::vector<Matrix> mats;
    mats.reserve(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) mats.push_back(frame[i] * path.matrix(i) * phi0_inv);
    mats.front() = Matrix::Identity(2 * path.n(), 2 * path.n());
    return {path.n(), path.times(), std::move(mats)};
}

HalfInteger robbin_salamon(const SymplecticPath& path) {
    if (path.n() == 0) return HalfInteger(0);
    const int dim = 2 * path.n();
    const CMatrix base_adjoint = unitary_frame(graph_frame(Matrix::Identity(dim, dim))).adjoint();

    std::vector<Complex> dets;
    dets.reserve(path.size());
    SouriauSample first;
    SouriauSample last;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const bool endpoint = i == 0 || i + 1 == path.size();
        SouriauSample s = souriau(base_adjoint, graph_frame(path.matrix(i)), endpoint);
        dets.push_back(s.det);
        if (i == 0) first = s;
        if (i + 1 == path.size()) last = std::move(s);
    }
    const double phase = accumulated_phase(dets);
    // N(+) + N(-), each N = (phase - sum a(1) + sum a(0)) / 2pi
    const double flow = (2.0 * phase - offset_angle_sum(last.angles, true) - offset_angle_sum(last.angles, false) +
                         offset_angle_sum(first.angles, true) + offset_angle_sum(first.angles, false)) /
                        kTwoPi;
    const double rounded = std::round(flow);
    if (std::abs(flow - rounded) > 1e-6) {
        std::ostringstream os;
        os << "Robbin-Salamon count " << flow << " is not integral";
        throw NumericalDegeneracy(os.str());
    }
    // RS = (N(+) + N(-)) / 2
    return HalfInteger::from_twice(static_cast<int>(rounded));
}

double endpoint_degeneracy(const SymplecticPath& path) {
    if (path.n() == 0) return 1.0;
    const Matrix& m = path.endpoint();
    return std::abs((m - Matrix::Identity(m.rows(), m.cols())).determinant());
}

int conley_zehnder(const SymplecticPath& path) {
    const double deg = endpoint_degeneracy(path);
    const double scale = std::pow(std::max(1.0, path.endpoint().cwiseAbs().maxCoeff()), 2 * path.n());
    if (deg < 1e-9 * scale) {
        std::ostringstream os;
        os << "Conley-Zehnder index needs a nondegenerate endpoint; |det(Psi(1) - I)| = " << deg;
        throw PreconditionError(os.str());
    }
    return robbin_salamon(path).to_int();
}

LagrangianLoop::LagrangianLoop(int n, std::vector<Matrix> frames) : n_(n), frames_(std::move(frames)) {
    if (n < 1) throw InputError("Lagrangian loop: n must be positive");
    if (frames_.size() < 2) throw InputError("Lagrangian loop: need at least two frames");
    const Matrix j = standard_j(n);
    for (std::size_t i = 0; i < frames_.size(); ++i) {
        const Matrix& f = frames_[i];
        if (f.rows() != 2 * n || f.cols() != n) throw InputError("Lagrangian loop: frames must be 2n x n");
        Eigen::JacobiSVD<Matrix> svd(f);
        const auto& sv = svd.singularValues();
        if (sv(n - 1) <= 1e-12 * std::max(1.0, sv(0)))
            throw InputError("Lagrangian loop: frame " + std::to_string(i) + " is rank deficient");
        Eigen::HouseholderQR<Matrix> qr(f);
        const Matrix on = qr.householderQ() * Matrix::Identity(2 * n, n);
        if ((on.transpose() * j * on).cwiseAbs().maxCoeff() > kLagrangianTol)
            throw InputError("Lagrangian loop: frame " + std::to_string(i) + " is not Lagrangian");
    }
    // closure: same subspace at both ends
    auto projector = [n](const Matrix& f) {
        Eigen::HouseholderQR<Matrix> qr(f);
        const Matrix on = qr.householderQ() * Matrix::Identity(2 * n, n);
        return Matrix(on * on.transpose());
    };
    if ((projector(frames_.front()) - projector(frames_.back())).cwiseAbs().maxCoeff() > 1e-9)
        throw InputError("Lagrangian loop is not closed: Lambda(1) != Lambda(0)");
}

double lagrangian_phase_winding(const std::vector<Matrix>& frames) {
    std::vector<Complex> dets;
    dets.reserve(frames.size());
    for (const Matrix& f : frames) {
        const Complex d = unitary_frame(f).determinant();
        dets.push_back(d * d);
    }
    return accumulated_phase(dets) / kTwoPi;
}

int maslov_loop(const LagrangianLoop& loop) {
    const double w = lagrangian_phase_winding(loop.frames());
    const double r = std::round(w);
    if (std::abs(w - r) > 1e-6) throw NumericalDegeneracy("Maslov winding is not integral; loop not closed?");
    return static_cast<int>(r);
}

bool viterbo_relation(int cz, int maslov, int morse_index) { return cz + maslov == morse_index; }

int bott_cz(HalfInteger rs, int dim) {
    if (dim < 0) throw InputError("Bott family dimension must be nonnegative");
    const HalfInteger cz = rs - HalfInteger::from_twice(dim);
    if (!cz.is_integer())
        throw InconsistencyError("RS - dim/2 = " + cz.str() + " is not an integer");
    return cz.to_int();
}

double GeodesicClass::length() const {
    double s = 0.0;
    for (int v : k) s += static_cast<double>(v) * v;
    return kTwoPi * std::sqrt(s);
}

SymplecticPath linearized_geodesic_path(const GeodesicClass& cls, int samples) {
    if (cls.n() < 1) throw InputError("geodesic class needs n >= 1");
    if (std::all_of(cls.k.begin(), cls.k.end(), [](int v) { return v == 0; }))
        throw InputError("k = 0 is the constant loop, not a closed geodesic");
    const int m = cls.n() - 1;
    const double ell = cls.length();
    return SymplecticPath::sample(
        m,
        [m, ell](double t) {
            Matrix psi = Matrix::Identity(2 * m, 2 * m);
            psi.topRightCorner(m, m) = t * ell * Matrix::Identity(m, m);
            return psi;
        },
        samples);
}

double taming_margin(double sigma_norm, double k_norm, int unit_samples) {
    if (k_norm < 0) throw InputError("taming margin: K_norm must be nonnegative");
    if (unit_samples < 1) throw InputError("taming margin: need at least one sample");
    // (|v|, |w|) = (cos a, sin a), a in [0, pi/2]; with u = 2a the quantity is
    // sigma (1 + cos u)/2 + (1 - cos u)/2 - K sin(u)/2.
    auto margin = [&](double u) {
        return 0.5 * sigma_norm * (1.0 + std::cos(u)) + 0.5 * (1.0 - std::cos(u)) - 0.5 * k_norm * std::sin(u);
    };
    double best = margin(kPi / 2);
    for (int i = 0; i < unit_samples; ++i) {
        const double u = unit_samples == 1 ? 0.0 : kPi * i / (unit_samples - 1);
        best = std::min(best, margin(u));
    }
    return best;
}

}  // namespace lagcap
