#ifndef FFCOND_ENUMERATION_HPP
#define FFCOND_ENUMERATION_HPP

#include "ffcond/abelian_group.hpp"
#include "ffcond/explicit_group.hpp"
#include "ffcond/local_field.hpp"
#include "ffcond/numbers.hpp"

#include <cstdint>
#include <vector>

namespace ffcond {

/* budgets for the exhaustive machinery; exceeding any throws
   resource_limit_error, which callers may treat as "skip this case" */
struct EnumerationCaps {
    std::uint64_t max_elements = kDefaultElementCap;
    std::uint64_t max_subgroups = 200000;
    std::uint64_t max_homs = std::uint64_t(1) << 22;
    std::uint64_t max_work = std::uint64_t(1) << 32;
};

/* every subgroup of a small explicit group, with a join table so that
   span tracking during tuple enumeration is a table lookup */
class SubgroupLattice {
public:
    SubgroupLattice(ExplicitGroup G, std::uint64_t max_subgroups);

    const ExplicitGroup& group() const { return G_; }
    std::size_t size() const { return subs_.size(); }
    const SubgroupHandle& subgroup(std::size_t s) const { return subs_[s]; }
    std::size_t trivial_id() const { return trivial_; }
    std::size_t full_id() const { return full_; }

    // id of <S_s, g>
    std::size_t join_with_element(std::size_t s, std::uint32_t g) const {
        return join_[s * G_.order() + g];
    }

private:
    ExplicitGroup G_;
    std::vector<SubgroupHandle> subs_;
    std::vector<std::uint32_t> join_;
    std::size_t trivial_ = 0;
    std::size_t full_ = 0;
};

/* #Sur(prod Z/m_i -> target) by dynamic programming over the target's
   subgroup lattice: a homomorphism is a torsion-element tuple, grouped by the
   subgroup its prefix spans. The total over all states is checked against
   prod |target[m_i]|. */
BigInt count_surjections(const std::vector<std::uint64_t>& source_moduli,
                         const SubgroupLattice& target);

/* same count by walking every tuple; throws past max_homs */
BigInt count_surjections_plain(const std::vector<std::uint64_t>& source_moduli,
                               const SubgroupLattice& target,
                               std::uint64_t max_homs);

/* |Aut G| as #Sur(G -> G), with no Delsarte input */
BigInt aut_order_oracle(const AbelianGroup& G, std::uint64_t max_subgroups = 200000);

/* |Inj(T, A)| by generator-image search: images of the canonical generators
   with prescribed torsion, pruned by independence of their socle projections.
   The deepest level is summed through precomputed socle fiber sizes. */
BigInt count_injections(const ExplicitGroup& A, const PrimaryType& T,
                        std::uint64_t max_work);

/* same count with the deepest level walked candidate by candidate */
BigInt count_injections_plain(const ExplicitGroup& A, const PrimaryType& T,
                              std::uint64_t max_work);

/* the distinct images of those injections: every subgroup of A isomorphic
   to T, each hit exactly |Aut T| times during the scan (checked) */
std::vector<SubgroupHandle> enumerate_subgroups(const ExplicitGroup& A,
                                                const PrimaryType& T,
                                                const EnumerationCaps& caps = {});

/* mixed-order T: one primary search per prime, then the direct sums; a
   subgroup isomorphic to T decomposes uniquely into its primary parts */
std::vector<SubgroupHandle> enumerate_subgroups(const ExplicitGroup& A,
                                                const AbelianGroup& T,
                                                const EnumerationCaps& caps = {});

/* kernels of all surjections X -> G, deduplicated: exactly the subgroups
   V <= X with X/V isomorphic to G. The number of surjections seen must be
   |kernels| * |Aut G|. */
std::vector<SubgroupHandle> quotient_kernels(const ExplicitGroup& X,
                                             const AbelianGroup& G,
                                             const EnumerationCaps& caps = {});

/* |quotient_kernels|, with each kernel's quotient type re-verified through
   the coset-order census */
BigInt count_quotients(const ExplicitGroup& X, const AbelianGroup& G,
                       const EnumerationCaps& caps = {});

/* Z(F,G;n) with no analytic input: #Sur(X_n -> G) / |Aut G|, both factors
   from the lattice DP on an explicit truncated X_n */
BigInt brute_Z(const LocalField& F, const AbelianGroup& G, long n,
               const EnumerationCaps& caps = {});

/* D(F,G;n): the count of G-extensions with discriminant exponent <= n,
   from the kernels of X_n surjections filtered by discriminant */
BigInt brute_D(const LocalField& F, const AbelianGroup& G, long n,
               const EnumerationCaps& caps = {});

} // namespace ffcond

#endif
