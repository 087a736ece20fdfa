#pragma once

// J_rho-holomorphic orbit cylinders in T*T^n, with J_rho: d/dq_i -> -rho(|p|) d/dp_i.
// Holomorphicity reads d_t q_i = rho^{-1} d_s p_i and d_s q_i = -rho^{-1} d_t p_i,
// so the k-fold orbit cylinder has q_1 = k t + qbar_1 and d_s p_1 = k rho(|p|).

#include <Eigen/Dense>
#include <vector>

namespace lagcap {

class RhoProfile {
public:
    enum class Kind { blended, constant_one };

    /// rho = 1 on [0, r0], rho = r on [r1, r_max], quintic blend in between
    /// with matched first and second derivatives.
    static RhoProfile blended(double r0 = 0.5, double r1 = 2.0, double r_max = 1e8);
    /// rho = 1 everywhere; a test profile outside the growth condition.
    static RhoProfile constant_one(double r_max = 1e8);

    double operator()(double r) const;
    double r0() const { return r0_; }
    double r1() const { return r1_; }
    double r_max() const { return r_max_; }
    Kind kind() const { return kind_; }

    /// (r, rho(r)) at `count` equally spaced points of [0, r_max_sample].
    std::vector<std::pair<double, double>> sample(int count, double r_max_sample) const;

private:
    RhoProfile(Kind kind, double r0, double r1, double r_max);
    Kind kind_;
    double r0_;
    double r1_;
    double r_max_;
};

struct CylinderGrid {
    int s_points = 200;
    int t_points = 200;
};

struct CylinderSolution {
    int n = 0;
    int k = 0;
    double s_max = 0.0;
    Eigen::VectorXd qbar;  // qbar(0) = qbar_1, the rest is qbar'
    Eigen::VectorXd pbar;
    std::vector<double> s;  // s_points nodes on [-S, S]
    std::vector<double> t;  // t_points nodes 2 pi j / t_points
    std::vector<Eigen::MatrixXd> q;  // q[i](a, b) = q_i(s_a, t_b) in [0, 2 pi)
    std::vector<Eigen::MatrixXd> p;
};

/// Throws TruncationError if p_1 leaves [-r_max, r_max] before s = +-S.
CylinderSolution integrate_orbit_cylinder(int n, int k, const Eigen::VectorXd& qbar, const Eigen::VectorXd& pbar,
                                          const RhoProfile& profile, double s_max = 2.0,
                                          const CylinderGrid& grid = {});

/// max over interior nodes and components of
/// |d_t q - rho^{-1} d_s p| + |d_s q + rho^{-1} d_t p|, by centered 8th-order differences.
double holomorphic_residual(const CylinderSolution& sol, const RhoProfile& profile);

/// max over the grid of |q_i - qbar_i| and |p_i - pbar_i| for i >= 2.
double constancy_defect(const CylinderSolution& sol);

bool p1_strictly_increasing(const CylinderSolution& sol);

/// Free parameters (qbar', pbar') of the orbit-cylinder family.
int orbit_family_dimension(const CylinderSolution& sol);

/// Grid cells over which the cylinder passes through (q, p); the probe must lie
/// on the (qbar', pbar') slice and inside the range of p_1.
int covering_degree(const CylinderSolution& sol, const Eigen::VectorXd& probe_q, const Eigen::VectorXd& probe_p);

struct ActionArea {
    double area = 0.0;          // omega-area of {r_lo <= log|p| <= r_hi}, by Stokes
    double length_bound = 0.0;  // (e^{r_hi} - e^{r_lo}) * l, l = 2 pi k
};

/// Area of the positive-end truncation from the boundary integrals of p dq,
/// with boundary circles interpolated from the grid. Throws VerificationFailure if
/// area < length_bound beyond quadrature tolerance.
ActionArea action_area_check(const CylinderSolution& sol, double r_lo, double r_hi);

}  // namespace lagcap
