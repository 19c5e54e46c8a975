#include "layered_cheb/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace layered_cheb {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients)
    : coeffs_(coefficients.begin(), coefficients.end()) {
    trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t power, BigInt coefficient) {
    std::vector<BigInt> c(power + 1, 0);
    c[power] = std::move(coefficient);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt{0};
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*this)[i] + other[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> c(coeffs_);
    for (auto& x : c) x = -x;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const { return *this + (-other); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<BigInt> c(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(std::size_t power) const {
    if (is_zero()) return {};
    std::vector<BigInt> c(power, 0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(c));
}

double IntPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->convert_to<double>();
    }
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1 || i == 0) out += mag.str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

RationalGF::RationalGF(IntPolynomial numerator, IntPolynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (denominator_[0] != 1) {
        throw std::invalid_argument("denominator must have constant term 1");
    }
}

IntPolynomial cheb_poly(int k) {
    if (k < 0) throw std::invalid_argument("Chebyshev degree must be nonnegative");
    std::vector<BigInt> c;
    for (int i = 0; 2 * i <= k; ++i) {
        BigInt term = binomial(k - i, i);
        c.push_back(i % 2 ? BigInt(-term) : term);
    }
    return IntPolynomial(std::move(c));
}

RationalGF r_k_gf(int k) {
    if (k < 2) throw std::invalid_argument("R_k needs k >= 2");
    return {cheb_poly(k - 1), cheb_poly(k)};
}

IntSeries expand(const RationalGF& gf, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    const auto& q = gf.denominator().coefficients();
    IntSeries f(static_cast<std::size_t>(n_max) + 1);
    for (std::size_t n = 0; n < f.size(); ++n) {
        BigInt value = gf.numerator()[n];
        for (std::size_t i = 1; i < q.size() && i <= n; ++i) value -= q[i] * f[n - i];
        f[n] = std::move(value);
    }
    return f;
}

bool catalan_identity_check(int k, int l) {
    if (l < 0 || l > k - 1) {
        throw std::out_of_range("Catalan identity needs 0 <= l <= k-1");
    }
    BigInt lhs = 0;
    for (int i = 0; i <= l; ++i) {
        BigInt term = binomial(k - i, i) * catalan(l - i);
        lhs += i % 2 ? BigInt(-term) : term;
    }
    BigInt rhs = binomial(k - 1 - l, l);
    if (l % 2) rhs = -rhs;
    return lhs == rhs;
}

double chebyshev_u_via_poly(int k, double theta) {
    const double t = std::cos(theta);
    if (!(t > 0.0)) throw std::domain_error("needs cos(theta) > 0");
    const double x = 1.0 / (4.0 * t * t);
    return std::pow(2.0 * t, k) * cheb_poly(k).evaluate(x);
}

std::string to_string(MainBranch branch) {
    switch (branch) {
        case MainBranch::SingleLayer: return "p=1";
        case MainBranch::TwoLayers: return "p=2";
        case MainBranch::ManyLayers: return "p>=3";
    }
    return "?";
}

PredictedSeries predicted_series(const Permutation& tau, int n_max, OracleLimits limits) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    if (tau.empty()) throw std::invalid_argument("tau must be nonempty");
    const auto shape = layer_decomposition(tau);
    if (!shape) throw std::invalid_argument("tau = " + tau.to_string() + " is not layered");

    PredictedSeries out;
    out.k = shape->length();
    out.layers = shape->layers();
    if (out.layers == 1) {
        out.branch = MainBranch::SingleLayer;
        out.values = count_series(n_max, PatternSet{Permutation{1, 2, 3}, tau}, limits);
        const auto degree = static_cast<std::size_t>(std::max(0, 2 * out.k - 2));
        out.degree_bound_holds = std::all_of(
            out.values.begin() + static_cast<std::ptrdiff_t>(std::min(degree + 1, out.values.size())),
            out.values.end(), [](const BigInt& v) { return v == 0; });
    } else if (out.layers == 2) {
        out.branch = MainBranch::TwoLayers;
        out.values = expand(r_k_gf(out.k), n_max);
    } else {
        out.branch = MainBranch::ManyLayers;
        for (int n = 0; n <= n_max; ++n) out.values.push_back(catalan(n));
    }
    return out;
}

}  // namespace layered_cheb
