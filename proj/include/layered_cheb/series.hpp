#pragma once

/**
 * @file series.hpp
 * @brief Dense integer polynomials, rational generating functions and the
 *        Chebyshev coefficient polynomials.
 *
 * The half-integer powers of x in U_{k-1}(1/(2 sqrt x)) / (sqrt x U_k(1/(2 sqrt x)))
 * cancel once both Chebyshev values are multiplied by the matching power of
 * sqrt x, which leaves the integer polynomials
 *
 *     P_k(x) = x^{k/2} U_k(1/(2 sqrt x)) = sum_i (-1)^i binom(k-i, i) x^i,
 *
 * so R_k(x) = P_{k-1}(x) / P_k(x) exactly. Nothing on the exact path uses
 * floating point.
 */

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "layered_cheb/integer.hpp"
#include "layered_cheb/oracle.hpp"
#include "layered_cheb/permutation.hpp"

namespace layered_cheb {

/// Polynomial with exact integer coefficients; index = power of x.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    /// x^power.
    static IntPolynomial monomial(std::size_t power, BigInt coefficient = 1);

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of x^i, zero beyond the degree.
    BigInt operator[](std::size_t i) const;

    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator-(const IntPolynomial& other) const;
    IntPolynomial operator*(const IntPolynomial& other) const;
    IntPolynomial operator-() const;

    /// Multiply by x^power.
    IntPolynomial shifted(std::size_t power) const;

    double evaluate(double x) const;

    bool operator==(const IntPolynomial&) const = default;

    std::string to_string() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// numerator / denominator with denominator(0) = 1, so the coefficients obey
/// an integer linear recurrence.
class RationalGF {
public:
    /// Throws std::invalid_argument unless the denominator's constant term is 1.
    RationalGF(IntPolynomial numerator, IntPolynomial denominator);

    const IntPolynomial& numerator() const noexcept { return numerator_; }
    const IntPolynomial& denominator() const noexcept { return denominator_; }

    bool operator==(const RationalGF&) const = default;

private:
    IntPolynomial numerator_;
    IntPolynomial denominator_;
};

using IntSeries = std::vector<BigInt>;

/// sum_{i=0}^{floor(k/2)} (-1)^i binom(k-i, i) x^i; the polynomial x^{k/2} U_k(1/(2 sqrt x)).
IntPolynomial cheb_poly(int k);

/// R_k = cheb_poly(k-1) / cheb_poly(k). Rejects k < 2.
RationalGF r_k_gf(int k);

/// Coefficients f_0..f_{n_max} via f_n = p_n - sum_{i>=1} q_i f_{n-i}.
IntSeries expand(const RationalGF& gf, int n_max);

/// sum_{i=0}^{l} (-1)^i binom(k-i, i) c_{l-i} == (-1)^l binom(k-1-l, l).
/// Requires 0 <= l <= k-1.
bool catalan_identity_check(int k, int l);

/// U_k(cos theta) recovered from cheb_poly: with t = cos theta in (0, 1] and
/// x = 1/(4 t^2), this is (2t)^k * cheb_poly(k)(x).
double chebyshev_u_via_poly(int k, double theta);

enum class MainBranch { SingleLayer, TwoLayers, ManyLayers };

std::string to_string(MainBranch branch);

struct PredictedSeries {
    IntSeries values;
    MainBranch branch = MainBranch::TwoLayers;
    int k = 0;
    int layers = 0;
    /// Single-layer branch only: the oracle counts vanish above 2k-2.
    std::optional<bool> degree_bound_holds;
};

/// The coefficient sequence of F_T for T = {(1,2,3), tau}, dispatched on the
/// number of layers of tau:
///   one layer     counts from the oracle (only the degree 2k-2 is predicted);
///   two layers    expand(r_k_gf(k), n_max);
///   three or more Catalan numbers.
/// Rejects a tau that is not layered.
PredictedSeries predicted_series(const Permutation& tau, int n_max, OracleLimits limits = {});

}  // namespace layered_cheb
