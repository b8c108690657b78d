#include "ffcond/discriminant.hpp"

#include "ffcond/errors.hpp"

#include <stdexcept>

namespace ffcond {

namespace {

// |T^{p^k}| where T^{p^k} is the image of multiplication by p^k
BigInt power_image_order(const PrimaryType& T, unsigned k) {
    BigInt p(T.prime());
    BigInt ord(1);
    for (unsigned lam : T.exponents())
        if (lam > k) ord *= pow_ui(p, lam - k);
    return ord;
}

} // namespace

BigRat rho(const PrimaryType& T) {
    if (T.is_trivial()) throw std::invalid_argument("rho: T must be nontrivial");
    BigInt p(T.prime());
    BigRat r(0);
    for (unsigned k = 0; k < T.exponent_index(); ++k)
        r += make_rat(power_image_order(T, k) - power_image_order(T, k + 1), pow_ui(p, k));
    if (r < 1) throw internal_error("rho: value below 1");
    return r;
}

BigRat beta_p(const PrimaryType& T) { return alpha_p(T) / rho(T); }

BigInt disc_upper_bound(const LocalField& F, const PrimaryType& T, long n) {
    if (n < 1) throw std::invalid_argument("disc_upper_bound: n must be >= 1");
    if (T.prime() != F.p())
        throw std::invalid_argument("disc_upper_bound: T must be a p-group for the residue characteristic");
    return ceil_rat(BigRat(n) * rho(T)) + T.order() - 1;
}

DiscLowerBound disc_lower_bound_data(const LocalField& F, const PrimaryType& T, long n) {
    if (n < 1) throw std::invalid_argument("disc_lower_bound_data: n must be >= 1");
    DiscLowerBound out;
    BigRat span(BigInt(n) - T.order() + 1);
    if (span <= 0) return out;
    BigInt nt = floor_rat(span / rho(T));
    if (nt < 1) return out;
    out.n_tilde = static_cast<long>(nt.get_si());
    out.Z = count_conductor_p(F, T, out.n_tilde).Z;
    out.valid = true;
    return out;
}

} // namespace ffcond
