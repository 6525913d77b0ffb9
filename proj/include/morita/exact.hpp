#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

// Exact scalar and integer-lattice arithmetic. Everything here is
// arbitrary-precision; there is no floating point anywhere in the library.

namespace morita {

using Integer = mpz_class;
using Rational = mpq_class;

// a/b in lowest terms with positive denominator. Throws std::domain_error
// when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Three-way lexicographic comparison helpers (mpq_class has no operator<=>).
int compare(const Rational& a, const Rational& b);

bool is_integral(const Rational& q);

/// Element of Q(i): re + im*i with exact rational components.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(const Rational& r) : re(r), im(0) {}
    GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}
    GaussianRational(long r) : re(r), im(0) {}

    bool is_real() const { return im == 0; }
    bool is_zero() const { return re == 0 && im == 0; }
    // Integer means im == 0 and re has denominator 1.
    bool is_integer() const { return im == 0 && is_integral(re); }

    GaussianRational operator+(const GaussianRational& o) const {
        return {re + o.re, im + o.im};
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return {re - o.re, im - o.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    // Exact field division; throws std::domain_error on zero divisor.
    GaussianRational operator/(const GaussianRational& o) const;

    bool operator==(const GaussianRational& o) const {
        return re == o.re && im == o.im;
    }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }
};

// Canonicalization order: lexicographic on (re, im).
int compare(const GaussianRational& a, const GaussianRational& b);
inline bool lex_less(const GaussianRational& a, const GaussianRational& b) {
    return compare(a, b) < 0;
}

// "a/b", "a", "a/b+c/di" with signs; round-trips through parse_scalar.
std::string format_scalar(const GaussianRational& z);
std::string format_rational(const Rational& q);

// Parses the grammar above. Throws std::invalid_argument on malformed text
// or a zero denominator.
GaussianRational parse_scalar(const std::string& text);

// Strictly real scalar; rejects any imaginary part.
Rational parse_rational(const std::string& text);

/// Vertex-indexed integer vector: dimension vectors, roots, lattice elements.
using IntVector = std::vector<Integer>;

Integer dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector negate(const IntVector& a);
IntVector scale(const Integer& k, const IntVector& a);
bool is_zero(const IntVector& a);
std::string format_int_vector(const IntVector& a);
IntVector parse_int_vector(const std::string& text);

// Lexicographic comparison of integer vectors (same length assumed).
int compare(const IntVector& a, const IntVector& b);

// Coefficients x with sum_k x_k * basis_k = target, exactly over Z, or
// congruent mod `modulus` when given. Returns nullopt when no solution
// exists. Works for any positive modulus, prime or not. Throws
// std::invalid_argument on length mismatch or empty basis.
std::optional<std::vector<Integer>> integer_solve(
    const std::vector<IntVector>& basis, const IntVector& target,
    const std::optional<Integer>& modulus = std::nullopt);

// Deterministic Miller-Rabin, exact for any input below 3.3e24 (fixed
// witness set), used on CRT classes whose members fit well inside that.
bool is_prime(const Integer& n);

}  // namespace morita
