#ifndef FFCOND_ABELIAN_GROUP_HPP
#define FFCOND_ABELIAN_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffcond/numbers.hpp"

namespace ffcond {

/* rank profile of an ell-primary abelian group A: ranks[k-1] = rk_{ell^k}(A),
   the F_ell-dimension of A^{ell^{k-1}} / A^{ell^k}. Entries are nonincreasing
   and implicitly zero beyond the stored length. */
struct RankVector {
    std::uint64_t prime = 2;
    std::vector<unsigned> ranks;

    RankVector() = default;
    RankVector(std::uint64_t ell, std::vector<unsigned> r);

    unsigned at(unsigned k) const; // k >= 1
};

class AbelianGroup;

/* ell-primary abelian group, recorded as the multiset of cyclic-factor
   exponents lambda_1 >= lambda_2 >= ... >= 1. Empty list = trivial group. */
class PrimaryType {
public:
    explicit PrimaryType(std::uint64_t ell, std::vector<unsigned> exponents = {});

    std::uint64_t prime() const { return ell_; }
    const std::vector<unsigned>& exponents() const { return exponents_; }
    bool is_trivial() const { return exponents_.empty(); }
    unsigned num_generators() const { return static_cast<unsigned>(exponents_.size()); }
    unsigned exponent_index() const { return exponents_.empty() ? 0u : exponents_[0]; } // e with exp = ell^e
    BigInt order() const;

    unsigned rank(unsigned k) const;       // rk_{ell^k}; k >= 1
    unsigned rank_tilde(unsigned k) const; // # cyclic factors of order exactly ell^k
    RankVector rank_vector() const;        // (rank(1), ..., rank(e))

    AbelianGroup to_group() const;

    bool operator==(const PrimaryType&) const = default;

private:
    std::uint64_t ell_;
    std::vector<unsigned> exponents_;
};

/* finite abelian group in invariant-factor form d_1 | d_2 | ... | d_r with all
   d_i >= 2; the empty list is the trivial group. Every constructor
   canonicalizes, so two equal groups always compare equal. */
class AbelianGroup {
public:
    AbelianGroup() = default;
    /* canonicalize an arbitrary list of cyclic orders; entries <= 1 are rejected */
    explicit AbelianGroup(const std::vector<std::uint64_t>& cyclic_orders);

    const std::vector<std::uint64_t>& invariant_factors() const { return factors_; }
    bool is_trivial() const { return factors_.empty(); }
    BigInt order() const;
    std::uint64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }

    std::vector<std::uint64_t> primes() const;             // ascending
    PrimaryType primary_part(std::uint64_t ell) const;
    unsigned rank(std::uint64_t ell, unsigned k) const;    // rk_{ell^k}

    AbelianGroup direct_product(const AbelianGroup& other) const;

    std::string to_string() const; // "C12xC2" (largest factor first), trivial = "C1"

    bool operator==(const AbelianGroup&) const = default;
    bool operator<(const AbelianGroup& o) const { return factors_ < o.factors_; }

private:
    std::vector<std::uint64_t> factors_;
};

/* accepts "C8xC4xC2" (case-insensitive, 'x'-separated) or "8,4,2"; the
   trivial group may be spelled "1", "C1" or "trivial" */
AbelianGroup parse_group_spec(const std::string& spec);

} // namespace ffcond

#endif
