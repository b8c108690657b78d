#include "ffcond/xn_model.hpp"

#include "ffcond/errors.hpp"

#include <stdexcept>

namespace ffcond {

namespace {

// smallest s >= 0 with i * p^s >= m
unsigned filtration_power(std::uint64_t i, std::uint64_t p, std::uint64_t m) {
    unsigned s = 0;
    std::uint64_t v = i;
    while (v < m) {
        v *= p;
        ++s;
    }
    return s;
}

} // namespace

XnModel::XnModel(const LocalField& F, std::uint64_t group_exponent, long n,
                 std::uint64_t element_cap)
    : F_(F), n_(n), exponent_(group_exponent), X_(build(element_cap)) {}

ExplicitGroup XnModel::build(std::uint64_t element_cap) {
    if (n_ < 1) throw std::invalid_argument("XnModel: n must be >= 1");
    if (exponent_ < 1) throw std::invalid_argument("XnModel: exponent must be >= 1");
    std::uint64_t p = F_.p();
    std::uint64_t q = F_.q_u64();

    std::vector<std::uint64_t> moduli;
    moduli.push_back(exponent_);
    moduli.push_back(q - 1);

    BigInt unit_order(1);
    for (std::uint64_t i = 1; i < static_cast<std::uint64_t>(n_); ++i) {
        if (i % p == 0) continue;
        unsigned a = filtration_power(i, p, static_cast<std::uint64_t>(n_));
        std::uint64_t ord = pow_ui(p, a).get_ui();
        for (unsigned j = 0; j < F_.f(); ++j) {
            moduli.push_back(ord);
            unit_levels_.emplace_back(i, j);
            unit_order *= ord;
        }
    }
    // the basis orders multiply to |U_n| = q^{n-1}
    if (unit_order != pow_ui(BigInt(q), static_cast<unsigned long>(n_ - 1)))
        throw internal_error("XnModel: unit basis orders do not fill U_n");
    return ExplicitGroup(std::move(moduli), element_cap);
}

std::vector<std::uint32_t> XnModel::filtration_generators(long m) const {
    if (m < 0 || m > n_)
        throw std::invalid_argument("XnModel::filtration_generators: m out of range");
    std::vector<std::uint32_t> gens;
    if (m == 0) {
        std::uint32_t tame = X_.coordinate_unit(tame_coord());
        if (tame != 0) gens.push_back(tame);
    }
    std::uint64_t floor_m = std::max<long>(m, 1);
    for (std::size_t pos = 0; pos < unit_levels_.size(); ++pos) {
        std::uint64_t i = unit_levels_[pos].first;
        unsigned s = filtration_power(i, F_.p(), floor_m);
        std::uint64_t ps = pow_ui(F_.p(), s).get_ui();
        std::uint32_t g = X_.scalar_mul(ps, X_.coordinate_unit(2 + pos));
        if (g != 0) gens.push_back(g);
    }
    return gens;
}

SubgroupHandle XnModel::filtration(long m) const {
    SubgroupHandle W = closure(X_, filtration_generators(m));
    BigInt q(F_.q_u64());
    BigInt expected = pow_ui(q, static_cast<unsigned long>(n_ - std::max<long>(m, 1)));
    if (m == 0) expected *= q - 1;
    if (BigInt(W.size()) != expected)
        throw internal_error("XnModel::filtration: |W_m| != q^(n-m)");
    return W;
}

long XnModel::conductor_exponent(const SubgroupHandle& V) const {
    std::vector<std::uint8_t> mask(X_.order(), 0);
    for (std::uint32_t x : V.elems) mask[x] = 1;
    for (long m = 0; m <= n_; ++m) {
        bool inside = true;
        for (std::uint32_t g : filtration_generators(m)) {
            if (!mask[g]) {
                inside = false;
                break;
            }
        }
        if (inside) return m;
    }
    throw internal_error("XnModel::conductor_exponent: W_n not contained in V");
}

BigInt XnModel::discriminant_exponent(const SubgroupHandle& V) const {
    if (V.size() == 0 || X_.order() % V.size() != 0)
        throw std::invalid_argument("XnModel::discriminant_exponent: bad subgroup");
    BigInt d(0);
    for (const SubgroupHandle& K :
         subgroups_containing(X_, V, kDefaultElementCap)) {
        AbelianGroup quo = quotient_type(X_, K);
        if (quo.invariant_factors().size() > 1) continue; // only cyclic X/K carries characters
        std::uint64_t index = X_.order() / K.size();
        d += BigInt(euler_phi_u64(index)) * conductor_exponent(K);
    }
    return d;
}

} // namespace ffcond
