#include "lagcap/multipoly.hpp"

#include <algorithm>
#include <cmath>

#include "lagcap/errors.hpp"

namespace lagcap {

MultiPoly MultiPoly::constant(int num_vars, Complex c) {
    MultiPoly p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int num_vars, int index) {
    if (index < 0 || index >= num_vars) throw InputError("polynomial variable index out of range");
    MultiPoly p(num_vars);
    Exponent e(num_vars, 0);
    e[index] = 1;
    p.add_term(e, 1.0);
    return p;
}

MultiPoly MultiPoly::linear(std::span<const Complex> coeffs, Complex offset) {
    const int nv = static_cast<int>(coeffs.size());
    MultiPoly p = constant(nv, offset);
    for (int i = 0; i < nv; ++i) {
        Exponent e(nv, 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

void MultiPoly::add_term(const Exponent& e, Complex c) {
    if (static_cast<int>(e.size()) != num_vars_) throw InputError("exponent length does not match variable count");
    if (c == Complex(0.0)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex(0.0)) terms_.erase(it);
    }
}

Complex MultiPoly::coefficient(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Complex(0.0) : it->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int v : e) s += v;
        d = std::max(d, s);
    }
    return d;
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

Complex MultiPoly::evaluate(std::span<const Complex> x) const {
    if (static_cast<int>(x.size()) != num_vars_) throw InputError("evaluation point has the wrong dimension");
    Complex sum = 0.0;
    for (const auto& [e, c] : terms_) {
        Complex term = c;
        for (int i = 0; i < num_vars_; ++i)
            for (int k = 0; k < e[i]; ++k) term *= x[i];
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly out(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent d = e;
        d[var] -= 1;
        out.add_term(d, c * static_cast<double>(e[var]));
    }
    return out;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& subs) const {
    if (static_cast<int>(subs.size()) != num_vars_) throw InputError("compose: one substitute per variable");
    const int nv = subs.empty() ? 0 : subs.front().num_vars();
    for (const MultiPoly& s : subs)
        if (s.num_vars() != nv) throw InputError("compose: substitutes must share a variable count");

    // cache powers of each substitute
    std::vector<std::vector<MultiPoly>> powers(num_vars_);
    for (int i = 0; i < num_vars_; ++i) {
        powers[i].push_back(constant(nv, 1.0));
        const int deg = std::max(0, degree_in(i));
        for (int k = 1; k <= deg; ++k) powers[i].push_back(powers[i].back() * subs[i]);
    }
    MultiPoly out(nv);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = constant(nv, c);
        for (int i = 0; i < num_vars_; ++i)
            if (e[i] > 0) term = term * powers[i][e[i]];
        out = out + term;
    }
    return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
    const int deg = std::max(0, degree_in(var));
    std::vector<MultiPoly> out(deg + 1, MultiPoly(num_vars_));
    for (const auto& [e, c] : terms_) {
        Exponent r = e;
        r[var] = 0;
        out[e[var]].add_term(r, c);
    }
    return out;
}

MultiPoly MultiPoly::pruned(double tol) const {
    double scale = 0.0;
    for (const auto& [e, c] : terms_) scale = std::max(scale, std::abs(c));
    MultiPoly out(num_vars_);
    for (const auto& [e, c] : terms_)
        if (std::abs(c) > tol * scale) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (o.num_vars_ != num_vars_) throw InputError("polynomial variable counts differ");
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + o * Complex(-1.0); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (o.num_vars_ != num_vars_) throw InputError("polynomial variable counts differ");
    MultiPoly out(num_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponent e(num_vars_);
            for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(Complex s) const {
    MultiPoly out(num_vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw InputError("negative polynomial power");
    MultiPoly out = constant(num_vars_, 1.0);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

MultiPoly weighted_power_sum(std::span<const double> a, int k) {
    const int nv = static_cast<int>(a.size());
    MultiPoly p(nv);
    for (int i = 0; i < nv; ++i) {
        Exponent e(nv, 0);
        e[i] = k;
        p.add_term(e, a[i]);
    }
    return p;
}

}  // namespace lagcap
