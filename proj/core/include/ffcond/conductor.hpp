#ifndef FFCOND_CONDUCTOR_HPP
#define FFCOND_CONDUCTOR_HPP

#include "ffcond/abelian_group.hpp"
#include "ffcond/delsarte.hpp"
#include "ffcond/local_field.hpp"
#include "ffcond/numbers.hpp"

namespace ffcond {

/* rk_{p^k} of U_n = (1+m)/(1+m^n), the principal units modulo level n:
   f * (floor((n-1)/p^{k-1}) - floor((n-1)/p^k)); n >= 1, k >= 1 */
std::uint64_t rank_un(const LocalField& F, long n, unsigned k);

/* rk_{p^k} of X_n = Z/p^e x F_q^* x U_n for 1 <= k <= exp_index; the cyclic
   Z/p^e factor adds one to every level up to e */
std::uint64_t rank_xn(const LocalField& F, unsigned exp_index, long n, unsigned k);

/* sum_k (p-1)/p^k * rk_{p^k}(T); the conductor-volume growth rate of T */
BigRat alpha_p(const PrimaryType& T);

/* the p^e-periodic defect -alpha_p(T) + sum_k rk_{p^k}(T) * d(n-1,k) with
   d(m,k) = {m/p^k} - {m/p^{k-1}}; defined for every integer n,
   delta(0) = 0 and delta(1) = -alpha_p(T) are the extremes */
BigRat delta_g(const PrimaryType& T, const BigInt& n);
BigRat delta_g(const PrimaryType& T, long n);

/* the finite-level correction
       prod_{k=1}^{e} prod_{j=0}^{rt_k(T)-1} (1 - p^{r_{k+1}(T)+j-rk_{p^k}(X_n)})
   always in [0,1], equal to 1 only for trivial T. Each exponent is also
   re-derived from the fractional-part expression of the rank and the two are
   required to agree. */
BigRat epsilon_factor(const PrimaryType& T, const LocalField& F, long n);

struct CountBreakdown {
    BigInt Z;
    BigRat alpha;          // growth rate of the wild part
    BigRat delta;          // periodic defect at this n
    BigRat epsilon;        // finite-level correction, in [0,1]
    BigRat leading_coeff;  // |G_p|/|Aut G_p| times the tame multiplier
    long n = 0;
    BigRat exponent_check; // n*alpha + delta; Z = leading_coeff * q^this * epsilon
    bool realizable = true;
};

/* number of abelian extensions of F with Galois group isomorphic to the
   p-primary T and conductor exponent at most n, with its decomposition;
   requires T.prime() == F.p() and n >= 1 */
CountBreakdown count_conductor_p(const LocalField& F, const PrimaryType& T, long n);

/* literal product formulas for the two special shapes, used to cross-check
   count_conductor_p: (C_p)^r and C_{p^r} over F; r >= 1, n >= 1 */
BigInt closed_form_elementary(const LocalField& F, unsigned r, long n);
BigInt closed_form_cyclic(const LocalField& F, unsigned r, long n);

/* number of subgroups of C_{ell^a} x C_{ell^d} isomorphic to Gl, where
   Gl = C_{ell^a} x C_{ell^b} and d = min(a, v_ell(q-1)); this is the
   n-independent multiplier the ell-part of G contributes for ell != p.
   Returns 0 when Gl needs 3+ generators or its second exponent exceeds d. */
BigInt tame_factor(const PrimaryType& Gl, const BigInt& q);

/* G occurs as a Galois group over F iff every ell-part away from p is a
   quotient of Z x C_{q-1}: at most 2 generators, second exponent <= v_ell(q-1) */
bool realizable(const AbelianGroup& G, const LocalField& F);

/* full count for arbitrary finite abelian G: wild part via count_conductor_p,
   one tame factor per remaining prime. Unrealizable G gives Z = 0 with the
   realizable flag cleared, not an error. The same count recomputed directly
   from the rank profile of X_n must agree; a mismatch raises internal_error. */
CountBreakdown count_conductor(const LocalField& F, const AbelianGroup& G, long n);

} // namespace ffcond

#endif
