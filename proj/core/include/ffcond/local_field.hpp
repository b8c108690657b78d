#ifndef FFCOND_LOCAL_FIELD_HPP
#define FFCOND_LOCAL_FIELD_HPP

#include <cstdint>

#include "ffcond/numbers.hpp"

namespace ffcond {

/* the Laurent series field F_q((t)) with q = p^f; only (p, f) is ever needed */
class LocalField {
public:
    LocalField(std::uint64_t p, unsigned f) : p_(p), f_(f) {
        if (!is_prime_u64(p)) throw std::invalid_argument("LocalField: p must be prime");
        if (f == 0) throw std::invalid_argument("LocalField: f >= 1 required");
    }

    static LocalField from_q(std::uint64_t q) {
        auto fac = factorize_u64(q);
        if (q < 2 || fac.size() != 1)
            throw std::invalid_argument("LocalField::from_q: q must be a prime power >= 2");
        return LocalField(fac[0].first, fac[0].second);
    }

    std::uint64_t p() const { return p_; }
    unsigned f() const { return f_; }
    BigInt q() const { return pow_ui(p_, f_); }

    /* residue field size as a machine word; the explicit models need this */
    std::uint64_t q_u64() const {
        BigInt v = q();
        if (!v.fits_ulong_p())
            throw std::invalid_argument("LocalField: q exceeds 64 bits");
        return v.get_ui();
    }

    bool operator==(const LocalField&) const = default;

private:
    std::uint64_t p_;
    unsigned f_;
};

} // namespace ffcond

#endif
