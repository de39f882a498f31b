#pragma once

// Exact integer polynomials, cyclotomic polynomials, the power series of
// 1/Phi_n, and arithmetic in the cyclotomic field Q(zeta_n) = Q[x]/(Phi_n).

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace cycloschur {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with integer coefficients. coeff(i) is the
/// coefficient of x^i; trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    /// x^degree - 1
    static IntPolynomial x_pow_minus_one(std::size_t degree);
    static IntPolynomial monomial(std::size_t degree, const Integer& c = 1);

    [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Integer>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    [[nodiscard]] Integer coeff(std::size_t i) const;
    [[nodiscard]] const Integer& leading() const { return coeffs_.back(); }

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Exact quotient. Throws std::domain_error when the remainder is nonzero
    /// or the divisor's leading coefficient does not divide exactly.
    [[nodiscard]] IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    [[nodiscard]] std::string to_string() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// Euler's totient. Throws std::invalid_argument for n == 0.
std::uint64_t euler_phi(std::uint64_t n);

/// All a in [0, n) with gcd(a, n) == 1, ascending. For n == 1 this is {0}.
std::vector<std::uint64_t> primitive_exponents(std::uint64_t n);

/// Phi_n, computed by dividing x^n - 1 exactly by Phi_d for every proper
/// divisor d of n. Results are memoized; safe to call concurrently.
const IntPolynomial& cyclotomic_poly(std::uint64_t n);

/// Coefficients of x^0 through x^max_degree of the formal power series
/// 1/Phi_n(x).
///
/// For n >= 2, Phi_n(0) = 1 and these are exactly h_k(omega_1, ..., omega_d)
/// over the primitive n-th roots. For n == 1, Phi_1(0) = -1 and the series is
/// -1 - x - x^2 - ...; the plain series is returned unchanged, so its signs
/// are the negatives of h_k(1) = 1.
std::vector<Integer> inverse_cyclotomic_series(std::uint64_t n, std::size_t max_degree);

/// Shared per-conductor data: n, phi(n) and the coefficients of Phi_n.
struct CycloContext {
    std::uint64_t n = 0;
    std::size_t degree = 0;
    std::vector<Integer> modulus;  // Phi_n coefficients, modulus[degree] == 1

    static std::shared_ptr<const CycloContext> get(std::uint64_t n);
};

/// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1).
class CycloElement {
public:
    /// Zero of Q(zeta_n).
    explicit CycloElement(std::uint64_t n);
    CycloElement(std::uint64_t n, std::vector<Rational> coeffs);

    static CycloElement zero(std::uint64_t n) { return CycloElement(n); }
    static CycloElement one(std::uint64_t n) { return from_integer(n, 1); }
    static CycloElement from_integer(std::uint64_t n, const Integer& value);
    /// zeta_n^k for any integer k (negative exponents allowed).
    static CycloElement zeta_power(std::uint64_t n, std::int64_t k);

    [[nodiscard]] std::uint64_t conductor() const { return ctx_->n; }
    [[nodiscard]] std::size_t dimension() const { return ctx_->degree; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const;

    CycloElement& operator+=(const CycloElement& rhs);
    CycloElement& operator-=(const CycloElement& rhs);
    CycloElement& operator*=(const CycloElement& rhs);
    CycloElement& operator/=(const CycloElement& rhs);
    friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
    friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
    friend CycloElement operator*(CycloElement a, const CycloElement& b) { return a *= b; }
    friend CycloElement operator/(CycloElement a, const CycloElement& b) { return a /= b; }
    CycloElement operator-() const;
    friend bool operator==(const CycloElement& a, const CycloElement& b);

    /// Multiplicative inverse via the extended Euclidean algorithm over Q[x].
    /// Throws std::domain_error for zero.
    [[nodiscard]] CycloElement inverse() const;

    /// The integer c when this element equals c * 1, otherwise nullopt.
    [[nodiscard]] std::optional<Integer> to_rational_integer() const;

    [[nodiscard]] std::string to_string() const;

private:
    void require_same_field(const CycloElement& other) const;
    std::shared_ptr<const CycloContext> ctx_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloElement& a);

inline CycloElement cyclo_add(const CycloElement& a, const CycloElement& b) { return a + b; }
inline CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b) { return a * b; }
inline CycloElement cyclo_neg(const CycloElement& a) { return -a; }
inline std::optional<Integer> cyclo_is_rational_integer(const CycloElement& a) {
    return a.to_rational_integer();
}

/// Reduces the integer polynomial sum_k coeffs[k] x^k modulo Phi_n
/// and returns power-basis coordinates. Used for zeta powers and Z_n systems.
std::vector<Integer> reduce_mod_cyclotomic(std::uint64_t n, std::span<const Integer> coeffs);

/// Power-basis coordinates of zeta_n^k (integral).
std::vector<Integer> zeta_power_coordinates(std::uint64_t n, std::int64_t k);

}  // namespace cycloschur
