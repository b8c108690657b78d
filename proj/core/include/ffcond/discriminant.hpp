#ifndef FFCOND_DISCRIMINANT_HPP
#define FFCOND_DISCRIMINANT_HPP

#include "ffcond/abelian_group.hpp"
#include "ffcond/conductor.hpp"
#include "ffcond/local_field.hpp"
#include "ffcond/numbers.hpp"

namespace ffcond {

/* rho(T) = sum_{k=0}^{e-1} p^{-k} (|T^{p^k}| - |T^{p^{k+1}}|): the ratio
   between discriminant and conductor exponents in the large-n regime.
   T^{p^k} has exponents max(0, lambda_i - k). Requires nontrivial T. */
BigRat rho(const PrimaryType& T);

/* beta_p(T) = alpha_p(T) / rho(T): growth rate of the count by discriminant */
BigRat beta_p(const PrimaryType& T);

/* every T-extension of F with conductor exponent <= n has discriminant
   exponent <= n * rho(T) + |T| - 1; returned with the ceiling applied to
   the rational part, which loses nothing against integer exponents */
BigInt disc_upper_bound(const LocalField& F, const PrimaryType& T, long n);

struct DiscLowerBound {
    long n_tilde = 0; // conductor level folded into the discriminant bound
    BigInt Z;         // count at that level; D(F,T;n) >= Z
    bool valid = false; // n_tilde >= 1; below that the bound is vacuous
};

/* conductor exponent <= n_tilde = floor((n - |T| + 1)/rho) forces
   discriminant exponent <= n, so D(F,T;n) >= Z(F,T;n_tilde) */
DiscLowerBound disc_lower_bound_data(const LocalField& F, const PrimaryType& T, long n);

} // namespace ffcond

#endif
