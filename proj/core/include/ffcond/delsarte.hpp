#ifndef FFCOND_DELSARTE_HPP
#define FFCOND_DELSARTE_HPP

#include <vector>

#include "ffcond/abelian_group.hpp"
#include "ffcond/numbers.hpp"

namespace ffcond {

/* the counting polynomial of T evaluated at t = (t_1, ..., t_e), e the
   exponent index of T:

       prod_{k=1}^{e} t_k^{r_{k+1}}  prod_{j=r_{k+1}}^{r_k - 1} (t_k - ell^j)

   with r_k = rk_{ell^k}(T). At t_k = ell^{rk_{ell^k}(A)} this is the number
   of injective homomorphisms T -> A; at t = t(T) it is |Aut(T)|. Raw
   evaluation: may be zero or negative for arbitrary t. */
BigInt fg_eval(const PrimaryType& T, const std::vector<BigInt>& t);

/* number of injective homomorphisms T -> A for an ell-primary A given by its
   rank profile; 0 whenever some rank of A drops below the matching rank of T */
BigInt inj_count(const PrimaryType& T, const RankVector& A);

/* same count through the factored form
       prod_k ell^{r_k(A) r_k(T)} prod_{j=0}^{rt_k(T)-1} (1 - ell^{r_{k+1}(T)+j-r_k(A)})
   evaluated in exact rationals; equals inj_count on every rank profile */
BigInt inj_count_factored(const PrimaryType& T, const RankVector& A);

BigInt aut_count(const PrimaryType& T);
BigInt aut_count(const AbelianGroup& G); // multiplicative over primary parts

/* number of subgroups of A isomorphic to T: inj_count / |Aut T|; the division
   is checked exact and a remainder raises internal_error */
BigInt subgroup_count(const PrimaryType& T, const RankVector& A);

/* product over the primes of |G| of the primary subgroup counts; a prime of G
   with no rank profile supplied counts against the trivial group there */
BigInt subgroup_count_general(const AbelianGroup& G, const std::vector<RankVector>& A_parts);

} // namespace ffcond

#endif
