#include "ffcond/explicit_group.hpp"

#include "ffcond/errors.hpp"
#include "ffcond/numbers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ffcond {

ExplicitGroup::ExplicitGroup(std::vector<std::uint64_t> moduli,
                             std::uint64_t element_cap)
    : moduli_(std::move(moduli)) {
    BigInt total(1);
    for (std::uint64_t m : moduli_) {
        if (m < 1) throw std::invalid_argument("ExplicitGroup: modulus must be >= 1");
        total *= m;
    }
    BigInt cap(std::min<std::uint64_t>(element_cap, (std::uint64_t(1) << 31) - 1));
    if (total > cap)
        throw resource_limit_error("ExplicitGroup: order " + to_string(total) +
                                   " exceeds element cap " + to_string(cap));
    stride_.resize(moduli_.size());
    std::uint32_t acc = 1;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        stride_[i] = acc;
        acc *= static_cast<std::uint32_t>(moduli_[i]);
        exponent_ = std::lcm(exponent_, moduli_[i]);
    }
    order_ = acc;
}

std::uint32_t ExplicitGroup::add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        std::uint64_t m = moduli_[i];
        std::uint64_t da = (a / stride_[i]) % m;
        std::uint64_t db = (b / stride_[i]) % m;
        out += static_cast<std::uint32_t>((da + db) % m) * stride_[i];
    }
    return out;
}

std::uint32_t ExplicitGroup::neg(std::uint32_t a) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        std::uint64_t m = moduli_[i];
        std::uint64_t da = (a / stride_[i]) % m;
        out += static_cast<std::uint32_t>((m - da) % m) * stride_[i];
    }
    return out;
}

std::uint32_t ExplicitGroup::scalar_mul(std::uint64_t c, std::uint32_t a) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        std::uint64_t m = moduli_[i];
        std::uint64_t da = (a / stride_[i]) % m;
        out += static_cast<std::uint32_t>(((c % m) * da) % m) * stride_[i];
    }
    return out;
}

std::uint64_t ExplicitGroup::element_order(std::uint32_t a) const {
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        std::uint64_t m = moduli_[i];
        std::uint64_t da = (a / stride_[i]) % m;
        ord = std::lcm(ord, m / std::gcd(m, da));
    }
    return ord;
}

std::vector<std::uint64_t> ExplicitGroup::decode(std::uint32_t idx) const {
    std::vector<std::uint64_t> coords(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        coords[i] = (idx / stride_[i]) % moduli_[i];
    return coords;
}

std::uint32_t ExplicitGroup::encode(const std::vector<std::uint64_t>& coords) const {
    if (coords.size() != moduli_.size())
        throw std::invalid_argument("ExplicitGroup::encode: wrong coordinate count");
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        idx += static_cast<std::uint32_t>(coords[i] % moduli_[i]) * stride_[i];
    return idx;
}

std::uint32_t ExplicitGroup::coordinate_unit(std::size_t i) const {
    return moduli_[i] > 1 ? stride_[i] : 0;
}

std::vector<std::uint32_t> ExplicitGroup::torsion_elements(std::uint64_t m) const {
    // digit d kills m iff d is a multiple of m_i / gcd(m_i, m)
    std::vector<std::uint32_t> out{0};
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        std::uint64_t mi = moduli_[i];
        std::uint64_t g = std::gcd(mi, m);
        std::uint64_t step = mi / g;
        std::vector<std::uint32_t> next;
        next.reserve(out.size() * g);
        for (std::uint64_t d = 0; d < mi; d += step) {
            std::uint32_t off = static_cast<std::uint32_t>(d) * stride_[i];
            for (std::uint32_t base : out) next.push_back(base + off);
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::uint64_t, std::uint64_t> ExplicitGroup::order_census() const {
    std::map<std::uint64_t, std::uint64_t> census;
    for (std::uint32_t x = 0; x < order_; ++x) ++census[element_order(x)];
    return census;
}

AbelianGroup ExplicitGroup::isomorphism_type() const {
    std::vector<std::uint64_t> nontrivial;
    for (std::uint64_t m : moduli_)
        if (m > 1) nontrivial.push_back(m);
    return AbelianGroup(nontrivial);
}

bool SubgroupHandle::contains(std::uint32_t x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
}

SubgroupHandle closure(const ExplicitGroup& A, const std::vector<std::uint32_t>& gens) {
    std::vector<std::uint8_t> mask(A.order(), 0);
    std::vector<std::uint32_t> list{0};
    mask[0] = 1;
    for (std::uint32_t g : gens) {
        if (mask[g]) continue;
        // append the cosets H+g, H+2g, ... until the multiple folds back into H
        std::size_t base = list.size();
        for (std::uint32_t t = g; !mask[t]; t = A.add(t, g)) {
            for (std::size_t i = 0; i < base; ++i) {
                std::uint32_t e = A.add(list[i], t);
                mask[e] = 1;
                list.push_back(e);
            }
        }
    }
    std::sort(list.begin(), list.end());
    return SubgroupHandle{std::move(list)};
}

AbelianGroup type_from_order_census(const std::map<std::uint64_t, std::uint64_t>& census) {
    std::uint64_t total = 0;
    std::set<std::uint64_t> primes;
    for (const auto& [ord, cnt] : census) {
        total += cnt;
        for (const auto& [ell, _] : factorize_u64(ord)) primes.insert(ell);
    }
    if (census.find(1) == census.end() || census.at(1) != 1)
        throw internal_error("type_from_order_census: identity count is not 1");

    AbelianGroup result;
    BigInt primary_total(1);
    for (std::uint64_t ell : primes) {
        // t_k = #{x : ord(x) | ell^k}; the jump t_k/t_{k-1} = ell^{r_k}
        std::vector<unsigned> rk;
        std::uint64_t prev = 1;
        for (std::uint64_t pk = ell;; pk *= ell) {
            std::uint64_t tk = prev;
            auto it = census.find(pk);
            if (it != census.end()) tk += it->second;
            if (tk == prev) break;
            std::uint64_t jump = tk / prev;
            if (tk % prev != 0)
                throw internal_error("type_from_order_census: torsion jump not integral");
            std::uint64_t v = valuation_u64(jump, ell);
            if (jump != pow_ui(ell, v).get_ui())
                throw internal_error("type_from_order_census: torsion jump not an ell-power");
            rk.push_back(static_cast<unsigned>(v));
            prev = tk;
            if (pk > total) break;
        }
        if (rk.empty()) continue;
        // conjugate partition: lambda_j = #{k : r_k >= j}
        std::vector<unsigned> lambda;
        for (unsigned j = 1; j <= rk[0]; ++j) {
            unsigned lam = 0;
            for (unsigned k = 0; k < rk.size(); ++k)
                if (rk[k] >= j) lam = k + 1;
            lambda.push_back(lam);
        }
        PrimaryType part(ell, lambda);
        primary_total *= part.order();
        result = result.direct_product(part.to_group());
    }
    // in an abelian group the primary orders multiply back to the census total
    if (primary_total != BigInt(total))
        throw internal_error("type_from_order_census: census is not an abelian profile");
    return result;
}

AbelianGroup subgroup_type(const ExplicitGroup& A, const SubgroupHandle& H) {
    std::map<std::uint64_t, std::uint64_t> census;
    for (std::uint32_t x : H.elems) ++census[A.element_order(x)];
    return type_from_order_census(census);
}

AbelianGroup quotient_type(const ExplicitGroup& A, const SubgroupHandle& V) {
    std::uint32_t vs = V.size();
    if (vs == 0 || A.order() % vs != 0)
        throw std::invalid_argument("quotient_type: bad subgroup size");
    std::vector<std::uint8_t> mask(A.order(), 0);
    for (std::uint32_t x : V.elems) mask[x] = 1;

    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d <= A.exponent(); ++d)
        if (A.exponent() % d == 0) divs.push_back(d);

    std::map<std::uint64_t, std::uint64_t> tally;
    for (std::uint32_t x = 0; x < A.order(); ++x) {
        for (std::uint64_t d : divs) {
            if (mask[A.scalar_mul(d, x)]) {
                ++tally[d];
                break;
            }
        }
    }
    std::map<std::uint64_t, std::uint64_t> census;
    std::uint64_t seen = 0;
    for (const auto& [d, cnt] : tally) {
        if (cnt % vs != 0)
            throw internal_error("quotient_type: coset tally not divisible by |V|");
        census[d] = cnt / vs;
        seen += cnt / vs;
    }
    if (seen != A.order() / vs)
        throw internal_error("quotient_type: coset census size mismatch");
    return type_from_order_census(census);
}

namespace {

std::vector<SubgroupHandle> lattice_walk(const ExplicitGroup& A,
                                         SubgroupHandle start,
                                         std::uint64_t max_subgroups) {
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<SubgroupHandle> out;
    std::vector<std::size_t> queue;
    seen.insert(start.elems);
    out.push_back(std::move(start));
    queue.push_back(0);
    while (!queue.empty()) {
        std::size_t h = queue.back();
        queue.pop_back();
        std::vector<std::uint32_t> base = out[h].elems;
        for (std::uint32_t x = 1; x < A.order(); ++x) {
            if (std::binary_search(base.begin(), base.end(), x)) continue;
            std::vector<std::uint32_t> gens = base;
            gens.push_back(x);
            SubgroupHandle ext = closure(A, gens);
            if (seen.insert(ext.elems).second) {
                if (out.size() >= max_subgroups)
                    throw resource_limit_error("subgroup lattice exceeds cap");
                out.push_back(std::move(ext));
                queue.push_back(out.size() - 1);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<SubgroupHandle> all_subgroups(const ExplicitGroup& A,
                                          std::uint64_t max_subgroups) {
    return lattice_walk(A, SubgroupHandle{{0}}, max_subgroups);
}

std::vector<SubgroupHandle> subgroups_containing(const ExplicitGroup& A,
                                                 const SubgroupHandle& V,
                                                 std::uint64_t max_subgroups) {
    return lattice_walk(A, V, max_subgroups);
}

} // namespace ffcond
