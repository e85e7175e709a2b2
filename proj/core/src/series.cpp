#include "hypermap/series.hpp"

#include "hypermap/errors.hpp"
#include "series_data.hpp"

#include <map>
#include <string>

namespace hypermap {

// ---------------------------------------------------------------- USeries

USeries::USeries(int order) : coeffs_(static_cast<std::size_t>(order < 0 ? 0 : order + 1), Rational(0))
{
    if (order < 0) {
        throw CensusError("series order must be nonnegative");
    }
}

USeries USeries::variable(int order)
{
    USeries s(order);
    if (order >= 1) {
        s.coeffs_[1] = 1;
    }
    return s;
}

USeries USeries::constant(const Rational& c, int order)
{
    USeries s(order);
    s.coeffs_[0] = c;
    return s;
}

USeries USeries::polynomial(std::span<const Rational> ascending, int order)
{
    USeries s(order);
    for (std::size_t k = 0; k < ascending.size() && static_cast<int>(k) <= order; ++k) {
        s.coeffs_[k] = ascending[k];
    }
    return s;
}

int USeries::valuation() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) {
            return static_cast<int>(k);
        }
    }
    return order() + 1;
}

USeries USeries::truncated(int order) const
{
    if (order > this->order()) {
        throw CensusError("cannot extend a series beyond its known order");
    }
    USeries s(order);
    std::copy_n(coeffs_.begin(), order + 1, s.coeffs_.begin());
    return s;
}

USeries& USeries::operator+=(const USeries& other)
{
    if (other.order() < order()) {
        *this = truncated(other.order());
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    return *this;
}

USeries& USeries::operator-=(const USeries& other)
{
    if (other.order() < order()) {
        *this = truncated(other.order());
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    return *this;
}

USeries& USeries::operator*=(const Rational& c)
{
    for (Rational& x : coeffs_) {
        x *= c;
    }
    return *this;
}

USeries operator*(const USeries& a, const USeries& b)
{
    const int n = std::min(a.order(), b.order());
    USeries out(n);
    Rational term;
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] == 0) {
                continue;
            }
            mpq_mul(term.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
            out.at(i + j) += term;
        }
    }
    return out;
}

USeries USeries::inverse() const
{
    if (coeffs_[0] == 0) {
        throw CensusError("series with zero constant term has no inverse");
    }
    const int n = order();
    USeries out(n);
    const Rational inv0 = 1 / coeffs_[0];
    out.coeffs_[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int i = 1; i <= k; ++i) {
            acc += coeffs_[i] * out.coeffs_[k - i];
        }
        out.coeffs_[k] = -acc * inv0;
    }
    return out;
}

USeries USeries::pow(int exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    USeries result = constant(1, order());
    USeries base = *this;
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

USeries USeries::divideByZPower(int k) const
{
    if (k > order()) {
        throw CensusError("dividing by z^" + std::to_string(k) + " leaves no known coefficients");
    }
    for (int i = 0; i < k; ++i) {
        if (coeffs_[i] != 0) {
            throw CensusError("series is not divisible by z^" + std::to_string(k));
        }
    }
    USeries out(order() - k);
    for (int i = k; i <= order(); ++i) {
        out.coeffs_[i - k] = coeffs_[i];
    }
    return out;
}

USeries USeries::compose(const USeries& inner) const
{
    if (inner[0] != 0) {
        throw CensusError("composition needs an inner series with zero constant term");
    }
    const int n = std::min(order(), inner.order());
    USeries result = constant(coeffs_[n], n);
    const USeries in = inner.truncated(n);
    for (int k = n - 1; k >= 0; --k) {
        result = result * in;
        result.coeffs_[0] += coeffs_[k];
    }
    return result;
}

bool USeries::hasIntegerCoefficients() const
{
    for (const Rational& c : coeffs_) {
        if (c.get_den() != 1) {
            return false;
        }
    }
    return true;
}

std::vector<BigInt> USeries::integerCoefficients() const
{
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].get_den() != 1) {
            throw NonIntegerCoefficient("coefficient of z^" + std::to_string(k) + " is " + coeffs_[k].get_str());
        }
        out.push_back(coeffs_[k].get_num());
    }
    return out;
}

USeries evaluatePolynomial(std::span<const Rational> ascending, const USeries& at)
{
    const int n = at.order();
    if (ascending.empty()) {
        return USeries(n);
    }
    USeries result = USeries::constant(ascending.back(), n);
    for (std::size_t k = ascending.size() - 1; k-- > 0;) {
        result = result * at;
        result.at(0) += ascending[k];
    }
    return result;
}

USeries tauOfZ(int order)
{
    // tau = z + 2 tau^2; each round fixes one more coefficient.
    const USeries z = USeries::variable(order);
    USeries tau(order);
    for (int round = 0; round <= order; ++round) {
        tau = z + (tau * tau) * Rational(2);
    }
    return tau;
}

USeries tOfZ(int order)
{
    // t = z (1 + 2t)^2.
    const USeries z = USeries::variable(order);
    const USeries one = USeries::constant(1, order);
    USeries t(order);
    for (int round = 0; round <= order; ++round) {
        const USeries s = one + t * Rational(2);
        t = z * (s * s);
    }
    return t;
}

namespace {

std::vector<Rational> toRationals(const std::vector<const char*>& decimal)
{
    std::vector<Rational> out;
    out.reserve(decimal.size());
    for (const char* s : decimal) {
        out.emplace_back(BigInt(s));
    }
    return out;
}

// Denominator exponents of (1 - tau)^a (1 - 4 tau)^b, equivalently
// (1 + t)^a (1 - 2t)^b, for genus 1..6.
struct DenominatorPowers {
    int first;
    int second;
};

DenominatorPowers denominatorPowers(int genus)
{
    static const DenominatorPowers table[] = {{0, 0}, {1, 2}, {5, 7}, {9, 12}, {13, 17}, {17, 22}, {21, 27}};
    return table[genus];
}

void checkGenus(int genus, int maxGenus)
{
    if (genus < 0 || genus > maxGenus) {
        throw CensusError("no closed form for genus " + std::to_string(genus));
    }
}

USeries finishCounting(const USeries& s, int genus)
{
    for (int k = 0; k <= s.order(); ++k) {
        if (s[k].get_den() != 1) {
            throw NonIntegerCoefficient("genus " + std::to_string(genus) + ": coefficient of z^" +
                                        std::to_string(k) + " is " + s[k].get_str());
        }
        if (s[k] < 0) {
            throw NegativeCoefficient("genus " + std::to_string(genus) + ": coefficient of z^" +
                                      std::to_string(k) + " is negative");
        }
    }
    return s;
}

} // namespace

USeries hgUnivariate(int genus, int order)
{
    checkGenus(genus, kMaxUnivariateGenus);
    const int work = order + 2;
    const USeries tau = tauOfZ(work);
    const USeries one = USeries::constant(1, work);
    const USeries tau3 = tau.pow(3);

    if (genus == 0) {
        // tau^3 (1 - 3 tau) / z^2
        const USeries numerator = tau3 * (one - tau * Rational(3));
        return finishCounting(numerator.divideByZPower(2).truncated(order), genus);
    }

    USeries numerator = tau3;
    if (genus >= 2) {
        const std::vector<Rational> p = toRationals(detail::tauNumerators()[genus - 2]);
        numerator = USeries::variable(work).pow(2 * genus - 2) * numerator * evaluatePolynomial(p, tau) *
                    Rational(4);
    }
    const DenominatorPowers pw = denominatorPowers(genus);
    const USeries denominator = (one - tau).pow(pw.first) * (one - tau * Rational(4)).pow(pw.second);
    return finishCounting((numerator * denominator.inverse()).truncated(order), genus);
}

USeries hgViaT(int genus, int order)
{
    checkGenus(genus, kMaxUnivariateGenus);
    const USeries t = tOfZ(order);
    const USeries one = USeries::constant(1, order);

    if (genus == 0) {
        return finishCounting(t * (one - t), genus);
    }
    USeries numerator = t.pow(3);
    if (genus >= 2) {
        const std::vector<Rational> p = toRationals(detail::tNumerators()[genus - 2]);
        numerator = t.pow(2 * genus + 1) * (one + t * Rational(2)) * evaluatePolynomial(p, t) * Rational(4);
    }
    const DenominatorPowers pw = denominatorPowers(genus);
    const USeries denominator = (one + t).pow(pw.first) * (one - t * Rational(2)).pow(pw.second);
    return finishCounting(numerator * denominator.inverse(), genus);
}

// ---------------------------------------------------------------- TSeries

std::size_t TSeries::termsUpTo(int degree)
{
    const auto n = static_cast<std::size_t>(degree + 1);
    return n * (n + 1) * (n + 2) / 6;
}

std::size_t TSeries::index(int a, int b, int c)
{
    const int n = a + b + c;
    const std::size_t block = termsUpTo(n - 1);
    return block + static_cast<std::size_t>(a * (n + 1) - a * (a - 1) / 2 + b);
}

TSeries::TSeries(int maxDegree) : maxDegree_(maxDegree)
{
    if (maxDegree < 0) {
        throw CensusError("series degree must be nonnegative");
    }
    coeffs_.assign(termsUpTo(maxDegree), Rational(0));
}

TSeries TSeries::variable(int which, int maxDegree)
{
    TSeries s(maxDegree);
    if (maxDegree >= 1) {
        s.at(which == 0, which == 1, which == 2) = 1;
    }
    return s;
}

TSeries TSeries::constant(const Rational& c, int maxDegree)
{
    TSeries s(maxDegree);
    s.coeffs_[0] = c;
    return s;
}

const Rational& TSeries::coefficient(int a, int b, int c) const
{
    static const Rational zero = 0;
    if (a < 0 || b < 0 || c < 0 || a + b + c > maxDegree_) {
        return zero;
    }
    return coeffs_[index(a, b, c)];
}

Rational& TSeries::at(int a, int b, int c)
{
    if (a < 0 || b < 0 || c < 0 || a + b + c > maxDegree_) {
        throw CensusError("exponent outside the truncation of a trivariate series");
    }
    return coeffs_[index(a, b, c)];
}

TSeries& TSeries::operator+=(const TSeries& other)
{
    if (other.maxDegree_ != maxDegree_) {
        throw CensusError("trivariate series of different truncation");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    return *this;
}

TSeries& TSeries::operator-=(const TSeries& other)
{
    if (other.maxDegree_ != maxDegree_) {
        throw CensusError("trivariate series of different truncation");
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    return *this;
}

TSeries& TSeries::operator*=(const Rational& c)
{
    for (Rational& x : coeffs_) {
        x *= c;
    }
    return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b)
{
    if (a.maxDegree_ != b.maxDegree_) {
        throw CensusError("trivariate series of different truncation");
    }
    const int N = a.maxDegree_;
    TSeries out(N);
    Rational term;
    a.forEachTerm([&](int a1, int b1, int c1, const Rational& x) {
        const int room = N - (a1 + b1 + c1);
        for (int n = 0; n <= room; ++n) {
            for (int a2 = 0; a2 <= n; ++a2) {
                for (int b2 = 0; a2 + b2 <= n; ++b2) {
                    const int c2 = n - a2 - b2;
                    const Rational& y = b.coeffs_[TSeries::index(a2, b2, c2)];
                    if (y == 0) {
                        continue;
                    }
                    mpq_mul(term.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
                    out.coeffs_[TSeries::index(a1 + a2, b1 + b2, c1 + c2)] += term;
                }
            }
        }
    });
    return out;
}

TSeries TSeries::inverse() const
{
    if (coeffs_[0] == 0) {
        throw CensusError("trivariate series with zero constant term has no inverse");
    }
    // 1/(c0 + R) = (1/c0) * 1/(1 + R/c0); iterate B <- 1 - (R/c0) B.
    const Rational inv0 = 1 / coeffs_[0];
    TSeries rest = *this;
    rest.coeffs_[0] = 0;
    rest *= inv0;
    const TSeries one = constant(1, maxDegree_);
    TSeries b = one;
    for (int round = 0; round < maxDegree_; ++round) {
        b = one - rest * b;
    }
    return b * inv0;
}

TSeries TSeries::pow(int exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    TSeries result = constant(1, maxDegree_);
    TSeries base = *this;
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

bool TSeries::hasIntegerCoefficients() const
{
    for (const Rational& c : coeffs_) {
        if (c.get_den() != 1) {
            return false;
        }
    }
    return true;
}

PqrParameters pqrOfXYU(int maxDegree)
{
    const TSeries x = TSeries::variable(0, maxDegree);
    const TSeries y = TSeries::variable(1, maxDegree);
    const TSeries u = TSeries::variable(2, maxDegree);
    PqrParameters s{TSeries(maxDegree), TSeries(maxDegree), TSeries(maxDegree)};
    // p = x + p(q + r), q = u + q(p + r), r = y + r(p + q). Every round fixes
    // one more total degree, so the iteration is stationary after
    // maxDegree + 1 rounds.
    for (int round = 0; round <= maxDegree + 1; ++round) {
        PqrParameters next{x + s.p * (s.q + s.r), u + s.q * (s.p + s.r), y + s.r * (s.p + s.q)};
        if (next.p == s.p && next.q == s.q && next.r == s.r) {
            return s;
        }
        s = std::move(next);
    }
    throw NoConvergence("p, q, r iteration did not settle at degree " + std::to_string(maxDegree));
}

TSeries hgTrivariate(int genus, int maxDegree)
{
    checkGenus(genus, kMaxTrivariateGenus);
    const auto [p, q, r] = pqrOfXYU(maxDegree);
    const TSeries one = TSeries::constant(1, maxDegree);
    const TSeries s = one - p - q - r;
    const TSeries pqr = p * q * r;

    TSeries result(maxDegree);
    if (genus == 0) {
        result = pqr * s;
    } else {
        TSeries numerator = pqr * (one - p) * (one - q) * (one - r);
        const TSeries discriminant = s * s - pqr * Rational(4);
        int power = 2;
        if (genus == 2) {
            // Group terms by the power of r: sum_c r^c (sum_{a,b} k p^a q^b).
            std::map<int, TSeries> byR;
            std::map<int, TSeries> powP, powQ;
            auto power_of = [&](std::map<int, TSeries>& cache, const TSeries& base, int e) -> const TSeries& {
                auto it = cache.find(e);
                if (it == cache.end()) {
                    it = cache.emplace(e, base.pow(e)).first;
                }
                return it->second;
            };
            std::map<std::pair<int, int>, TSeries> powPQ;
            for (const auto& term : detail::genus2Numerator()) {
                auto key = std::pair(term.p, term.q);
                auto it = powPQ.find(key);
                if (it == powPQ.end()) {
                    it = powPQ.emplace(key, power_of(powP, p, term.p) * power_of(powQ, q, term.q)).first;
                }
                byR.try_emplace(term.r, maxDegree).first->second += it->second * Rational(term.coefficient);
            }
            TSeries poly(maxDegree);
            for (const auto& [c, inner] : byR) {
                poly += inner * r.pow(c);
            }
            numerator = numerator * poly;
            power = 7;
        }
        result = numerator * discriminant.pow(-power);
    }

    std::string problem;
    result.forEachTerm([&](int a, int b, int c, const Rational& k) {
        if (problem.empty() && (k.get_den() != 1 || k < 0)) {
            problem = "coefficient of x^" + std::to_string(a) + " y^" + std::to_string(b) + " u^" +
                      std::to_string(c) + " is " + k.get_str();
        }
    });
    if (!problem.empty()) {
        throw NonIntegerCoefficient("genus " + std::to_string(genus) + ": " + problem);
    }
    return result;
}

} // namespace hypermap
