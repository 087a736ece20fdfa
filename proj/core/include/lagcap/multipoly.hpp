#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

namespace lagcap {

using Complex = std::complex<double>;
using Exponent = std::vector<int>;

/// Sparse multivariate polynomial with complex coefficients.
/// Exact zeros are never stored.
class MultiPoly {
public:
    explicit MultiPoly(int num_vars = 0) : num_vars_(num_vars) {}

    static MultiPoly constant(int num_vars, Complex c);
    static MultiPoly variable(int num_vars, int index);
    /// sum_i coeffs[i] x_i + offset
    static MultiPoly linear(std::span<const Complex> coeffs, Complex offset = 0.0);

    int num_vars() const { return num_vars_; }
    const std::map<Exponent, Complex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, Complex c);
    Complex coefficient(const Exponent& e) const;

    int total_degree() const;
    int degree_in(int var) const;

    Complex evaluate(std::span<const Complex> x) const;
    MultiPoly derivative(int var) const;

    /// Substitutes x_i -> subs[i]; all substitutes share one variable count.
    MultiPoly compose(const std::vector<MultiPoly>& subs) const;

    /// Coefficients c_d(x) with p = sum_d c_d(x) x_var^d; each c_d is free of x_var.
    std::vector<MultiPoly> coefficients_in(int var) const;

    /// Drops coefficients with |c| <= tol * max|c|.
    MultiPoly pruned(double tol) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(Complex s) const;
    MultiPoly pow(int k) const;

private:
    int num_vars_;
    std::map<Exponent, Complex> terms_;
};

/// h_k(z) = sum_i a_i z_i^k in a.size() variables.
MultiPoly weighted_power_sum(std::span<const double> a, int k);

}  // namespace lagcap
