#pragma once

// Linear symplectic algebra on R^{2n} = (q_1..q_n, p_1..p_n) with the standard
// matrix J0 = [[0, I], [-I, 0]], and the Conley-Zehnder, Robbin-Salamon and
// Maslov indices.
//
// Sign convention: CZ(t -> exp(pi J0 t)) = 1. Equivalently, J0 is treated as
// multiplication by i on C^n, so the complex coordinate is z = q - i p.

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "lagcap/half_integer.hpp"

namespace lagcap {

using Matrix = Eigen::MatrixXd;

/// J0 of size 2n x 2n.
Matrix standard_j(int n);

/// true iff ||M^T J0 M - J0||_inf <= tol. Odd or non-square input is an InputError.
bool check_symplectic(const Matrix& m, double tol);

/// Block sum of A in Sp(2a) and B in Sp(2b), returned in Sp(2(a+b)) with
/// coordinates (q_A, q_B, p_A, p_B).
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// exp(theta J0) on R^2 embedded in the (q_j, p_j) plane of R^{2n}.
Matrix plane_rotation(int n, int j, double theta);

/// Discretized path of symplectic matrices on [0, 1] starting at the identity.
class SymplecticPath {
public:
    static constexpr double kSymplecticTol = 1e-9;

    SymplecticPath() = default;
    /// Validates times (0 = t_0 < ... < t_N = 1), symplecticity and Psi(0) = I.
    SymplecticPath(int n, std::vector<double> times, std::vector<Matrix> matrices);

    /// Samples f at `samples` equally spaced times (samples >= 2).
    static SymplecticPath sample(int n, const std::function<Matrix(double)>& f, int samples);

    int n() const { return n_; }
    std::size_t size() const { return times_.size(); }
    double time(std::size_t i) const { return times_[i]; }
    const Matrix& matrix(std::size_t i) const { return matrices_[i]; }
    const std::vector<double>& times() const { return times_; }
    const std::vector<Matrix>& matrices() const { return matrices_; }
    const Matrix& endpoint() const { return matrices_.back(); }

private:
    int n_ = 0;
    std::vector<double> times_;
    std::vector<Matrix> matrices_;
};

/// Midpoint of a and b along the polar-decomposition geodesic a * P^{1/2} * O^{1/2},
/// where a^{-1} b = P O. Stays symplectic to rounding; throws NumericalDegeneracy
/// when the samples are too far apart to pick a principal square root.
Matrix symplectic_midpoint(const Matrix& a, const Matrix& b);

/// Inserts the geodesic midpoint between every pair of consecutive samples.
SymplecticPath refine(const SymplecticPath& path);

/// Pointwise direct sum; both paths must share the same sample times.
SymplecticPath direct_sum(const SymplecticPath& a, const SymplecticPath& b);

/// t -> L(t) Psi(t) with L(t) = exp(2 pi t J0) acting on the (q_j, p_j) plane.
/// Homotopic to concatenating the full rotation loop in front of the path.
SymplecticPath prepend_rotation_loop(const SymplecticPath& path, int j = 0);

/// Re-expresses a path in another trivialization: t -> Phi(t) Psi(t) Phi(0)^{-1}.
/// `frame` must share the sample times of `path`; Phi(0) need not be I.
SymplecticPath change_trivialization(const SymplecticPath& path,
                                     const std::vector<Matrix>& frame);

/// Robbin-Salamon index, exact in (1/2)Z.
///
/// Uses the Lagrangian graph of Psi in (R^{2n} x R^{2n}, -w + w) against the
/// diagonal. The relative Souriau unitary W(t) has eigenvalue 1 exactly on
/// crossings; the index is the mean of the net counterclockwise eigenvalue
/// flows through exp(+i eps) and exp(-i eps), which is the eps-regularized
/// crossing-form count and treats Morse and Morse-Bott crossings alike.
HalfInteger robbin_salamon(const SymplecticPath& path);

/// |det(Psi(1) - I)|.
double endpoint_degeneracy(const SymplecticPath& path);

/// Conley-Zehnder index of a path with nondegenerate endpoint.
/// Throws PreconditionError naming |det(Psi(1) - I)| otherwise.
int conley_zehnder(const SymplecticPath& path);

/// Closed loop of Lagrangian frames, each a 2n x n full-rank matrix.
class LagrangianLoop {
public:
    static constexpr double kLagrangianTol = 1e-9;

    LagrangianLoop() = default;
    /// Validates the Lagrangian condition, full rank and closure.
    LagrangianLoop(int n, std::vector<Matrix> frames);

    int n() const { return n_; }
    std::size_t size() const { return frames_.size(); }
    const Matrix& frame(std::size_t i) const { return frames_[i]; }
    const std::vector<Matrix>& frames() const { return frames_; }

private:
    int n_ = 0;
    std::vector<Matrix> frames_;
};

/// Maslov index: winding number of det(U)^2 for the unitarized frames.
int maslov_loop(const LagrangianLoop& loop);

/// Winding of t -> det(U(t))^2 for an open path of Lagrangian frames, in units
/// of 2 pi (not generally an integer).
double lagrangian_phase_winding(const std::vector<Matrix>& frames);

/// cz + maslov == morse_index.
bool viterbo_relation(int cz, int maslov, int morse_index);

/// CZ of a Morse-Bott family: rs - dim/2, which must be an integer.
int bott_cz(HalfInteger rs, int dim);

/// Free homotopy class of a closed geodesic on the flat torus (R/2piZ)^n.
struct GeodesicClass {
    std::vector<int> k;

    int n() const { return static_cast<int>(k.size()); }
    double length() const;  // 2 pi |k|
    static constexpr int morse_index() { return 0; }
    int bott_dim() const { return n() - 1; }
};

/// Linearized geodesic flow on the contact distribution of S*T^n in the flat
/// trivialization: Psi(t) = [[I, t l I], [0, I]] on R^{2(n-1)}, l = 2 pi |k|.
/// For n = 1 the path lives on the zero space.
SymplecticPath linearized_geodesic_path(const GeodesicClass& cls, int samples = 65);

/// Minimum over sampled unit vectors (v, w) of
/// sigma_norm |v|^2 + |w|^2 - K_norm |v||w|. At least 1/2 whenever
/// sigma_norm >= 1 and K_norm <= 1; the critical direction |v| = |w| is always
/// among the samples.
double taming_margin(double sigma_norm, double k_norm, int unit_samples);

}  // namespace lagcap
