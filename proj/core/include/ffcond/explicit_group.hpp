#ifndef FFCOND_EXPLICIT_GROUP_HPP
#define FFCOND_EXPLICIT_GROUP_HPP

#include "ffcond/abelian_group.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace ffcond {

inline constexpr std::uint64_t kDefaultElementCap = std::uint64_t(1) << 14;

/* a finite abelian group held elementwise: the direct product of Z/m_i over
   the given moduli, elements encoded as mixed-radix indices in [0, order).
   Coordinate positions are stable; modulus-1 coordinates are legal and inert.
   Everything here is exhaustive-search plumbing, so construction refuses
   groups larger than element_cap. */
class ExplicitGroup {
public:
    explicit ExplicitGroup(std::vector<std::uint64_t> moduli,
                           std::uint64_t element_cap = kDefaultElementCap);

    std::size_t num_coords() const { return moduli_.size(); }
    std::uint64_t modulus(std::size_t i) const { return moduli_[i]; }
    std::uint32_t order() const { return order_; }
    std::uint64_t exponent() const { return exponent_; }

    std::uint32_t zero() const { return 0; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t scalar_mul(std::uint64_t c, std::uint32_t a) const;
    std::uint64_t element_order(std::uint32_t a) const;

    std::vector<std::uint64_t> decode(std::uint32_t idx) const;
    std::uint32_t encode(const std::vector<std::uint64_t>& coords) const;
    std::uint32_t coordinate_unit(std::size_t i) const; // the generator e_i

    std::vector<std::uint32_t> torsion_elements(std::uint64_t m) const; // {x : m*x = 0}, sorted
    std::map<std::uint64_t, std::uint64_t> order_census() const;
    AbelianGroup isomorphism_type() const; // straight from the moduli

private:
    std::vector<std::uint64_t> moduli_;
    std::vector<std::uint32_t> stride_;
    std::uint32_t order_ = 1;
    std::uint64_t exponent_ = 1;
};

/* subgroup as its sorted element list; always contains 0 */
struct SubgroupHandle {
    std::vector<std::uint32_t> elems;

    std::uint32_t size() const { return static_cast<std::uint32_t>(elems.size()); }
    bool contains(std::uint32_t x) const;
    bool operator==(const SubgroupHandle&) const = default;
    bool operator<(const SubgroupHandle& o) const { return elems < o.elems; }
};

SubgroupHandle closure(const ExplicitGroup& A, const std::vector<std::uint32_t>& gens);

/* isomorphism type recovered purely from how many elements have each order */
AbelianGroup type_from_order_census(const std::map<std::uint64_t, std::uint64_t>& census);

AbelianGroup subgroup_type(const ExplicitGroup& A, const SubgroupHandle& H);

/* type of A/V from the coset-order census: each coset of V is seen |V| times
   when scanning all of A, and the per-order tallies must divide evenly */
AbelianGroup quotient_type(const ExplicitGroup& A, const SubgroupHandle& V);

/* breadth-first walk of the subgroup lattice; throws resource_limit_error
   past max_subgroups */
std::vector<SubgroupHandle> all_subgroups(const ExplicitGroup& A,
                                          std::uint64_t max_subgroups);

/* the interval [V, A] of the lattice: subgroups of A containing V */
std::vector<SubgroupHandle> subgroups_containing(const ExplicitGroup& A,
                                                 const SubgroupHandle& V,
                                                 std::uint64_t max_subgroups);

} // namespace ffcond

#endif
