#pragma once

// Lagrangian capacity values, embedding criteria, Reeb chord bounds and the
// embedding-capacity estimates for Riemannian manifolds into CP^n.
//
// Units: areas, normalized so that a complex line has symplectic area pi.

#include <string>
#include <vector>

namespace lagcap {

enum class DomainKind { ball, cylinder, polydisk, ellipsoid, standard_torus };

std::string to_string(DomainKind kind);
DomainKind domain_kind_from_string(const std::string& name);

struct Domain {
    DomainKind kind = DomainKind::ball;
    int n = 1;
    double radius = 1.0;             // ball, cylinder, polydisk, standard_torus
    std::vector<double> axes;        // ellipsoid: a_1 <= ... <= a_n (areas)

    static Domain ball(int n, double r = 1.0);
    static Domain cylinder(int n, double r = 1.0);
    static Domain polydisk(int n, double r);
    static Domain ellipsoid(std::vector<double> axes);
    static Domain standard_torus(int n, double r);

    void validate() const;
};

enum class CapacityStatus { proved, conjectural, unknown };

std::string to_string(CapacityStatus status);

struct CapacityValue {
    double value = 0.0;  // NaN when status is unknown
    CapacityStatus status = CapacityStatus::unknown;
    double lower_bound = 0.0;
    std::string citation;
};

/// c_L: ball(r) = pi r^2/n, cylinder(r) = pi r^2, polydisk(r) = pi r^2 (proved);
/// ellipsoid = pi / sum(1/a_i) (conjectural).
CapacityValue lagrangian_capacity(const Domain& d);

/// The variant of c_L taken over all closed Lagrangians: known to equal pi/2
/// on B^4(1); for n > 2 only the lower bound pi/n is known.
CapacityValue lagrangian_capacity_all_lagrangians(const Domain& d);

/// Minimal symplectic area of T^n(r) = (S^1(r))^n: pi r^2.
double a_min_standard_torus(double r);

/// P^{2n}(r) embeds into B^{2n}(1) iff r <= 1/sqrt(n).
bool polydisk_embeds_ball(int n, double r);

/// Reeb chord length bound T <= c_L(U) for star-shaped U (ball or ellipsoid).
CapacityValue chord_bound(const Domain& d);

struct MetricSpec {
    int n = 1;
    double ell_min = 0.0;
    double volume = 0.0;

    static MetricSpec flat_torus(int n);  // (R/2piZ)^n
};

struct WeinsteinBounds {
    double geodesic_bound = 0.0;  // (n+1) l_min / pi
    double volume_bound = 0.0;    // (vol(Q) vol B^n(1) / vol CP^n)^{1/n}
    double best = 0.0;
};

WeinsteinBounds weinstein_bounds(const MetricSpec& m, int n_target);

/// vol B^k(1) = pi^{k/2} / Gamma(k/2 + 1).
double unit_ball_volume(int k);

/// C_n for the flat torus, from the parity-split closed forms with exact factorials.
double flat_torus_volume_constant(int n);

/// Upper bound 2(n + sqrt n) from the product embedding; also re-derives
/// max |z|^2 = sum (2 + 2 s_j) at s_j = 1/sqrt(n) and throws
/// VerificationFailure if the two disagree.
double flat_torus_upper_bound(int n);

/// max of sum_j (2 + 2 s_j) over sum s_j^2 <= 1, evaluated at the maximizer.
double flat_torus_max_norm_squared(int n);

}  // namespace lagcap
