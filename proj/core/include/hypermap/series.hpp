#pragma once

#include "hypermap/arith.hpp"

#include <array>
#include <span>
#include <vector>

namespace hypermap {

// Univariate power series in z with exact rational coefficients, known up to
// and including z^order. Arithmetic truncates to the smaller order.
class USeries {
public:
    explicit USeries(int order);

    static USeries variable(int order);
    static USeries constant(const Rational& c, int order);
    // Polynomial given by ascending coefficients, truncated to `order`.
    static USeries polynomial(std::span<const Rational> ascending, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    Rational& at(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    // Index of the first nonzero coefficient, or order() + 1 if none is known.
    int valuation() const;
    USeries truncated(int order) const;

    USeries& operator+=(const USeries& other);
    USeries& operator-=(const USeries& other);
    USeries& operator*=(const Rational& c);
    friend USeries operator+(USeries a, const USeries& b) { return a += b; }
    friend USeries operator-(USeries a, const USeries& b) { return a -= b; }
    friend USeries operator*(USeries a, const Rational& c) { return a *= c; }
    friend USeries operator*(const USeries& a, const USeries& b);

    // 1 / this; the constant term must be nonzero.
    USeries inverse() const;
    // Integer power; negative exponents go through inverse().
    USeries pow(int exponent) const;
    // this / z^k. Throws CensusError unless the first k coefficients vanish.
    USeries divideByZPower(int k) const;
    // this(inner(z)); inner must have zero constant term.
    USeries compose(const USeries& inner) const;

    bool hasIntegerCoefficients() const;
    // Coefficients as integers; throws NonIntegerCoefficient otherwise.
    std::vector<BigInt> integerCoefficients() const;

    bool operator==(const USeries& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

// Evaluates a polynomial (ascending coefficients) at a series by Horner.
USeries evaluatePolynomial(std::span<const Rational> ascending, const USeries& at);

// tau(z) with tau(0) = 0 and tau (1 - 2 tau) = z.
USeries tauOfZ(int order);
// t(z) with t(0) = 0 and z = t / (1 + 2t)^2.
USeries tOfZ(int order);

inline constexpr int kMaxUnivariateGenus = 6;
inline constexpr int kMaxTrivariateGenus = 2;

// Rooted hypermaps of genus g counted by darts, from the closed form in tau.
// Throws NonIntegerCoefficient if any coefficient fails to be an integer.
USeries hgUnivariate(int genus, int order);
// Same series through the t = tau / (1 - 2 tau) parameterization.
USeries hgViaT(int genus, int order);

// Trivariate series in (x, y, u), truncated at total degree maxDegree.
// Exponents (a, b, c) are the powers of x, y and u respectively.
class TSeries {
public:
    explicit TSeries(int maxDegree);

    // which: 0 -> x, 1 -> y, 2 -> u
    static TSeries variable(int which, int maxDegree);
    static TSeries constant(const Rational& c, int maxDegree);

    int maxDegree() const { return maxDegree_; }
    const Rational& coefficient(int a, int b, int c) const;
    Rational& at(int a, int b, int c);

    TSeries& operator+=(const TSeries& other);
    TSeries& operator-=(const TSeries& other);
    TSeries& operator*=(const Rational& c);
    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    friend TSeries operator*(TSeries a, const Rational& c) { return a *= c; }
    friend TSeries operator*(const TSeries& a, const TSeries& b);

    TSeries inverse() const;
    TSeries pow(int exponent) const;

    // Calls fn(a, b, c, coeff) for every nonzero coefficient.
    template <class Fn>
    void forEachTerm(Fn&& fn) const;

    bool hasIntegerCoefficients() const;
    bool operator==(const TSeries& other) const { return coeffs_ == other.coeffs_; }

private:
    static std::size_t index(int a, int b, int c);
    static std::size_t termsUpTo(int degree);

    int maxDegree_;
    std::vector<Rational> coeffs_;
};

struct PqrParameters {
    TSeries p;
    TSeries q;
    TSeries r;
};

// Solves x = p(1-q-r), u = q(1-p-r), y = r(1-p-q) for series p, q, r with
// zero constant terms. Throws NoConvergence if the fixed-point iteration
// does not settle within maxDegree + 1 rounds.
PqrParameters pqrOfXYU(int maxDegree);

// Rooted hypermaps of genus g <= 2 by vertices (x), hyperedges (y) and
// faces (u). The genus-0 series excludes the empty hypermap.
TSeries hgTrivariate(int genus, int maxDegree);

template <class Fn>
void TSeries::forEachTerm(Fn&& fn) const
{
    for (int n = 0; n <= maxDegree_; ++n) {
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; a + b <= n; ++b) {
                const Rational& c = coeffs_[index(a, b, n - a - b)];
                if (c != 0) {
                    fn(a, b, n - a - b, c);
                }
            }
        }
    }
}

} // namespace hypermap
