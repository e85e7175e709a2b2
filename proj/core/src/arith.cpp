#include "hypermap/arith.hpp"

#include "hypermap/errors.hpp"

#include <algorithm>
#include <cctype>

namespace hypermap {

BigInt exact_divide(const BigInt& a, const BigInt& b, std::string_view what)
{
    if (b == 0) {
        throw InexactDivision("division by zero" + (what.empty() ? std::string{} : " in " + std::string(what)));
    }
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        std::string msg = a.get_str() + " is not divisible by " + b.get_str();
        if (!what.empty()) {
            msg += " (" + std::string(what) + ")";
        }
        throw InexactDivision(msg);
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::string to_decimal(const BigInt& x)
{
    return x.get_str(10);
}

bool parse_natural(std::string_view text, BigInt& out)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        return false;
    }
    return out.set_str(std::string(text), 10) == 0;
}

} // namespace hypermap
