#include "aztec/arith.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace aztec {

Rat rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

Int factorial(long n) {
    if (n < 0)
        throw std::invalid_argument("factorial of negative argument");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Int binomial(const Int& alpha, long p) {
    if (p < 0)
        return Int(0);
    Int num(1);
    for (long t = 0; t < p; ++t)
        num *= alpha - t;
    Int result;
    Int pf = factorial(p);
    // the product of p consecutive integers is divisible by p!
    mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), pf.get_mpz_t());
    return result;
}

Int binomial(long alpha, long p) {
    return binomial(Int(alpha), p);
}

Rat rising_factorial(const Rat& x, unsigned long k) {
    Rat result(1);
    for (unsigned long t = 0; t < k; ++t) {
        Rat factor = x + static_cast<long>(t);
        if (factor == 0)
            throw PoleError("rising_factorial: factor " + rat_to_string(x) + " + " +
                            std::to_string(t) + " vanishes");
        result *= factor;
    }
    return result;
}

Rat pow_rat(const Rat& base, long e) {
    if (e == 0)
        return Rat(1);
    if (base == 0) {
        if (e < 0)
            throw std::domain_error("pow_rat: zero base with negative exponent");
        return Rat(0);
    }
    Rat b = base;
    unsigned long n;
    if (e < 0) {
        b = 1 / b;
        n = static_cast<unsigned long>(-e);
    } else {
        n = static_cast<unsigned long>(e);
    }
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), n);
    return out; // b canonical => b^n canonical
}

Int pow_int(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Rat frac_part(const Rat& q) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Rat(fl);
}

GammaArg::GammaArg(Rat value) : value_(std::move(value)) {
    if (value_ <= 0)
        throw PoleError("Gamma argument must be positive, got " + rat_to_string(value_));
}

namespace {

long integer_difference(const Rat& a, const Rat& b) {
    Rat d = a - b;
    if (d.get_den() != 1)
        throw PairingError("Gamma arguments " + rat_to_string(a) + " and " +
                           rat_to_string(b) + " do not differ by an integer");
    if (!d.get_num().fits_slong_p())
        throw std::overflow_error("Gamma argument difference too large");
    return d.get_num().get_si();
}

} // namespace

Rat gamma_ratio_product(const std::vector<GammaArg>& numer,
                        const std::vector<GammaArg>& denom) {
    std::map<Rat, std::pair<std::vector<Rat>, std::vector<Rat>>> classes;
    for (const GammaArg& g : numer)
        classes[frac_part(g.value())].first.push_back(g.value());
    for (const GammaArg& g : denom)
        classes[frac_part(g.value())].second.push_back(g.value());

    Rat result(1);
    for (auto& [frac, pair] : classes) {
        auto& [top, bot] = pair;
        if (top.size() != bot.size())
            throw PairingError("unpairable Gamma arguments in fractional class " +
                               rat_to_string(frac) + ": " + std::to_string(top.size()) +
                               " numerator vs " + std::to_string(bot.size()) +
                               " denominator terms");
        std::sort(top.begin(), top.end());
        std::sort(bot.begin(), bot.end());
        for (std::size_t k = 0; k < top.size(); ++k) {
            long delta = integer_difference(top[k], bot[k]);
            if (delta >= 0)
                result *= rising_factorial(bot[k], static_cast<unsigned long>(delta));
            else
                result /= rising_factorial(top[k], static_cast<unsigned long>(-delta));
        }
    }
    return result;
}

} // namespace aztec
