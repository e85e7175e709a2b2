#include "hypermap/kz.hpp"

#include "hypermap/errors.hpp"

#include <algorithm>
#include <string>

namespace hypermap {

HomoPoly::HomoPoly(int degree, std::vector<Term> terms) : degree_(degree), terms_(std::move(terms))
{
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
}

BigInt HomoPoly::coefficient(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& term, const Monomial& key) { return term.first < key; });
    if (it == terms_.end() || it->first != m) {
        return 0;
    }
    return it->second;
}

BigInt HomoPoly::total() const
{
    BigInt sum = 0;
    for (const auto& [m, c] : terms_) {
        sum += c;
    }
    return sum;
}

namespace {

// Dense scratch space for one right-hand side, indexed by the exponents of t
// and u; the exponent of v is implied by homogeneity.
class Accumulator {
public:
    explicit Accumulator(int degree) : degree_(degree), cells_(static_cast<std::size_t>(degree + 1) * (degree + 1)) {}

    BigInt& at(int f, int b) { return cells_[static_cast<std::size_t>(f) * (degree_ + 1) + b]; }

    // cell += weight * coeff for the monomial multiplied by t^df u^db (the
    // v shift is implied).
    void addShifted(const Monomial& m, int df, int db, const BigInt& coeff, long weight)
    {
        BigInt& cell = at(m.faces + df, m.hyperedges + db);
        if (weight >= 0) {
            mpz_addmul_ui(cell.get_mpz_t(), coeff.get_mpz_t(), static_cast<unsigned long>(weight));
        } else {
            mpz_submul_ui(cell.get_mpz_t(), coeff.get_mpz_t(), static_cast<unsigned long>(-weight));
        }
    }

    HomoPoly finish(int genus, int darts)
    {
        const BigInt divisor = darts + 1;
        std::vector<HomoPoly::Term> terms;
        for (int f = 0; f <= degree_; ++f) {
            for (int b = 0; b + f <= degree_; ++b) {
                BigInt& cell = at(f, b);
                if (cell == 0) {
                    continue;
                }
                const int w = degree_ - f - b;
                const std::string where = "H_{" + std::to_string(genus) + "," + std::to_string(darts) + "} at t^" +
                                          std::to_string(f) + " u^" + std::to_string(b) + " v^" + std::to_string(w);
                if (cell < 0) {
                    throw NegativeCoefficient("negative right-hand side for " + where);
                }
                if (f == 0 || b == 0 || w == 0) {
                    throw CensusError("nonzero coefficient with a zero exponent in " + where);
                }
                terms.emplace_back(Monomial{f, b, w}, exact_divide(cell, divisor, where));
            }
        }
        return HomoPoly(degree_, std::move(terms));
    }

private:
    int degree_;
    std::vector<BigInt> cells_;
};

} // namespace

KzTable KzTable::fill(int maxGenus, int maxDarts)
{
    KzTable table;
    table.maxGenus_ = maxGenus;
    table.maxDarts_ = maxDarts;
    if (maxGenus < 0 || maxDarts < 1) {
        throw CensusError("KZ fill needs maxGenus >= 0 and maxDarts >= 1");
    }
    table.polys_.assign(maxGenus + 1, std::vector<HomoPoly>(maxDarts + 1));
    for (int g = 0; g <= maxGenus; ++g) {
        for (int d = 0; d <= maxDarts; ++d) {
            table.polys_[g][d] = HomoPoly(d + 2 - 2 * g);
        }
    }

    auto H = [&table](int g, int d) -> const HomoPoly* {
        if (g < 0 || d < 1) {
            return nullptr;
        }
        return &table.polys_[g][d];
    };

    table.polys_[0][1] = HomoPoly(3, {{Monomial{1, 1, 1}, BigInt(1)}});

    for (int d = 2; d <= maxDarts; ++d) {
        for (int g = 0; g <= maxGenus; ++g) {
            const int degree = d + 2 - 2 * g;
            if (degree < 3) {
                continue;
            }
            Accumulator acc(degree);

            if (const HomoPoly* prev = H(g, d - 1)) {
                const long w = 2L * d - 1;
                for (const auto& [m, c] : prev->terms()) {
                    acc.addShifted(m, 1, 0, c, w);
                    acc.addShifted(m, 0, 1, c, w);
                    acc.addShifted(m, 0, 0, c, w);
                }
            }
            if (const HomoPoly* prev2 = H(g, d - 2)) {
                const long w = d - 2;
                for (const auto& [m, c] : prev2->terms()) {
                    acc.addShifted(m, 1, 1, c, 2 * w);
                    acc.addShifted(m, 1, 0, c, 2 * w);
                    acc.addShifted(m, 0, 1, c, 2 * w);
                    acc.addShifted(m, 2, 0, c, -w);
                    acc.addShifted(m, 0, 2, c, -w);
                    acc.addShifted(m, 0, 0, c, -w);
                }
            }
            if (const HomoPoly* lower = H(g - 1, d - 2)) {
                const long w = static_cast<long>(d - 1) * (d - 1) * (d - 2);
                for (const auto& [m, c] : lower->terms()) {
                    acc.addShifted(m, 0, 0, c, w);
                }
            }
            BigInt scaled;
            for (int i = 0; i <= g; ++i) {
                for (int j = 1; j <= d - 3; ++j) {
                    const HomoPoly& left = table.polys_[i][j];
                    const HomoPoly& right = table.polys_[g - i][d - 2 - j];
                    if (left.isZero() || right.isZero()) {
                        continue;
                    }
                    const unsigned long w = static_cast<unsigned long>(4 + 6 * j) * (d - 2 - j);
                    for (const auto& [ml, cl] : left.terms()) {
                        mpz_mul_ui(scaled.get_mpz_t(), cl.get_mpz_t(), w);
                        for (const auto& [mr, cr] : right.terms()) {
                            BigInt& cell = acc.at(ml.faces + mr.faces, ml.hyperedges + mr.hyperedges);
                            mpz_addmul(cell.get_mpz_t(), scaled.get_mpz_t(), cr.get_mpz_t());
                        }
                    }
                }
            }
            table.polys_[g][d] = acc.finish(g, d);
        }
    }
    return table;
}

bool KzTable::covers(int genus, int darts) const
{
    return genus >= 0 && genus <= maxGenus_ && darts <= maxDarts_;
}

const HomoPoly& KzTable::poly(int genus, int darts) const
{
    static const HomoPoly zero;
    if (!covers(genus, darts)) {
        throw NotFilled("H_{" + std::to_string(genus) + "," + std::to_string(darts) +
                        "} is outside the filled range (genus <= " + std::to_string(maxGenus_) +
                        ", darts <= " + std::to_string(maxDarts_) + ")");
    }
    if (darts < 1) {
        return zero;
    }
    return polys_[genus][darts];
}

BigInt KzTable::rootedCount(int genus, int darts, int vertices, int hyperedges, int faces) const
{
    const HomoPoly& p = poly(genus, darts);
    if (!validateHypermapKey(genus, darts, vertices, hyperedges, faces)) {
        return 0;
    }
    if (darts == 0) {
        return 1;
    }
    return p.coefficient(Monomial{faces, hyperedges, vertices});
}

BigInt KzTable::rootedTotal(int genus, int darts) const
{
    if (darts == 0) {
        (void)poly(genus, darts);
        return genus == 0 ? 1 : 0;
    }
    return poly(genus, darts).total();
}

CountTable KzTable::toCountTable(int genus) const
{
    CountTable out(TableMeta{"kz", maxDarts_, genus});
    for (int d = 1; d <= maxDarts_; ++d) {
        for (const auto& [m, c] : poly(genus, d).terms()) {
            out.add(HypermapKey{genus, d, m.vertices, m.hyperedges}, c);
        }
    }
    return out;
}

} // namespace hypermap
