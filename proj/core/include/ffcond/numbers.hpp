#ifndef FFCOND_NUMBERS_HPP
#define FFCOND_NUMBERS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ffcond/errors.hpp"

namespace ffcond {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt pow_ui(std::uint64_t base, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

/* base^e for integer e of either sign, base > 0 */
inline BigRat pow_si(const BigInt& base, const BigInt& e) {
    if (base <= 0) throw std::invalid_argument("pow_si: base must be positive");
    if (!e.fits_slong_p()) throw std::invalid_argument("pow_si: exponent out of range");
    long ee = e.get_si();
    BigInt mag = pow_ui(base, static_cast<unsigned long>(ee < 0 ? -ee : ee));
    if (ee >= 0) return BigRat(mag);
    return BigRat(1) / BigRat(mag);
}

/* num/den in canonical form; the raw two-argument mpq_class constructor
   skips canonicalization and breaks comparisons, so always build through
   this */
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

/* floor(a/b), b > 0, exact over negative a as well */
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt floor_rat(const BigRat& x) {
    return floor_div(x.get_num(), x.get_den());
}

inline BigInt ceil_rat(const BigRat& x) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

/* fractional part in [0,1), i.e. x - floor(x) */
inline BigRat frac_part(const BigRat& x) {
    BigRat r = x - BigRat(floor_rat(x));
    r.canonicalize();
    return r;
}

inline bool is_integer(const BigRat& x) { return x.get_den() == 1; }

/* ell-adic valuation of n != 0 */
inline unsigned valuation(BigInt n, std::uint64_t ell) {
    if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
    if (ell < 2) throw std::invalid_argument("valuation: ell must be >= 2");
    unsigned v = 0;
    BigInt l(static_cast<unsigned long>(ell));
    while (mpz_divisible_p(n.get_mpz_t(), l.get_mpz_t())) {
        n /= l;
        ++v;
    }
    return v;
}

inline unsigned valuation_u64(std::uint64_t n, std::uint64_t ell) {
    if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
    unsigned v = 0;
    while (n % ell == 0) { n /= ell; ++v; }
    return v;
}

/* trial division; adequate for the desk-scale orders this library accepts */
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

/* (prime, multiplicity) pairs in ascending prime order */
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            unsigned m = 0;
            while (n % d == 0) { n /= d; ++m; }
            out.emplace_back(d, m);
        }
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

inline std::uint64_t euler_phi_u64(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto [p, m] : factorize_u64(n)) {
        (void)m;
        r -= r / p;
    }
    return r;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/* "num/den" with canonical sign on the numerator; integers keep the "/1" off */
inline std::string rat_string(const BigRat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

} // namespace ffcond

#endif
