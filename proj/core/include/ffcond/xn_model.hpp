#ifndef FFCOND_XN_MODEL_HPP
#define FFCOND_XN_MODEL_HPP

#include "ffcond/explicit_group.hpp"
#include "ffcond/local_field.hpp"
#include "ffcond/numbers.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ffcond {

/* explicit model of X_n = Z/E x F_q^* x U_n for F = F_q((t)), where
   U_n = (1+m)/(1+m^n) and E annihilates the quotients being counted.
   Open subgroups V <= X_n with X_n/V of exponent dividing E correspond to
   abelian extensions with conductor exponent <= n.

   Coordinates: 0 = the Frobenius direction Z/E, 1 = the tame character
   group F_q^*, then one coordinate per basis unit 1 + v_j t^i with
   1 <= i < n coprime to p and j < f; that basis unit has order
   p^{min s : i p^s >= n}, and those orders multiply to |U_n| = q^{n-1}. */
class XnModel {
public:
    XnModel(const LocalField& F, std::uint64_t group_exponent, long n,
            std::uint64_t element_cap = kDefaultElementCap);

    const ExplicitGroup& group() const { return X_; }
    const LocalField& field() const { return F_; }
    long level() const { return n_; }

    std::size_t z_coord() const { return 0; }
    std::size_t tame_coord() const { return 1; }
    // (i, j) of each unit coordinate, in coordinate order starting at index 2
    const std::vector<std::pair<std::uint64_t, unsigned>>& unit_levels() const {
        return unit_levels_;
    }

    /* generators of the image W_m of the m-th unit filtration step, 0 <= m <= n;
       W_0 is the full unit image (tame part included), W_n is trivial.
       The basis unit at level i enters W_m as its p^s-th power, s minimal
       with i p^s >= m. */
    std::vector<std::uint32_t> filtration_generators(long m) const;

    /* closure of those generators; the order is checked against
       |W_m| = q^{n-m}, times q-1 more for m = 0 */
    SubgroupHandle filtration(long m) const;

    /* smallest m in [0, n] with W_m <= V; 0 means V absorbs the whole unit
       image (the unramified case) */
    long conductor_exponent(const SubgroupHandle& V) const;

    /* sum over subgroups K with V <= K <= X and X/K cyclic of
       phi([X:K]) * conductor_exponent(K): each such K is the kernel of
       exactly phi([X:K]) characters of X/V, so this is the conductor
       product over characters, i.e. the discriminant exponent of the
       extension cut out by V */
    BigInt discriminant_exponent(const SubgroupHandle& V) const;

private:
    LocalField F_;
    long n_;
    std::uint64_t exponent_;
    std::vector<std::pair<std::uint64_t, unsigned>> unit_levels_;
    ExplicitGroup X_;

    ExplicitGroup build(std::uint64_t element_cap);
};

} // namespace ffcond

#endif
