#include "ffcond/abelian_group.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <map>

namespace ffcond {

RankVector::RankVector(std::uint64_t ell, std::vector<unsigned> r)
    : prime(ell), ranks(std::move(r)) {
    if (!is_prime_u64(ell)) throw std::invalid_argument("RankVector: prime required");
    for (std::size_t i = 1; i < ranks.size(); ++i) {
        if (ranks[i] > ranks[i - 1])
            throw std::invalid_argument("RankVector: ranks must be nonincreasing");
    }
}

unsigned RankVector::at(unsigned k) const {
    if (k == 0) throw std::invalid_argument("RankVector::at: k >= 1 required");
    return k <= ranks.size() ? ranks[k - 1] : 0u;
}

PrimaryType::PrimaryType(std::uint64_t ell, std::vector<unsigned> exponents)
    : ell_(ell), exponents_(std::move(exponents)) {
    if (!is_prime_u64(ell_)) throw std::invalid_argument("PrimaryType: ell must be prime");
    std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
    while (!exponents_.empty() && exponents_.back() == 0) exponents_.pop_back();
}

BigInt PrimaryType::order() const {
    unsigned long total = 0;
    for (unsigned e : exponents_) total += e;
    return pow_ui(ell_, total);
}

unsigned PrimaryType::rank(unsigned k) const {
    if (k == 0) throw std::invalid_argument("PrimaryType::rank: k >= 1 required");
    unsigned r = 0;
    for (unsigned e : exponents_) {
        if (e >= k) ++r; else break; // sorted descending
    }
    return r;
}

unsigned PrimaryType::rank_tilde(unsigned k) const { return rank(k) - rank(k + 1); }

RankVector PrimaryType::rank_vector() const {
    std::vector<unsigned> r;
    r.reserve(exponent_index());
    for (unsigned k = 1; k <= exponent_index(); ++k) r.push_back(rank(k));
    return RankVector(ell_, std::move(r));
}

AbelianGroup PrimaryType::to_group() const {
    std::vector<std::uint64_t> orders;
    for (unsigned e : exponents_) {
        BigInt d = pow_ui(ell_, e);
        if (!d.fits_ulong_p())
            throw std::invalid_argument("PrimaryType::to_group: cyclic order exceeds 64 bits");
        orders.push_back(d.get_ui());
    }
    return AbelianGroup(orders);
}

AbelianGroup::AbelianGroup(const std::vector<std::uint64_t>& cyclic_orders) {
    // regroup prime-power contributions; slot s of the descending partition of
    // every prime multiplies into invariant factor number s from the top
    std::map<std::uint64_t, std::vector<unsigned>> parts;
    for (std::uint64_t d : cyclic_orders) {
        if (d <= 1) throw std::invalid_argument("canonicalize: cyclic orders must be >= 2");
        for (auto [p, m] : factorize_u64(d)) parts[p].push_back(m);
    }
    std::size_t slots = 0;
    for (auto& [p, exps] : parts) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        slots = std::max(slots, exps.size());
    }
    std::vector<std::uint64_t> desc;
    for (std::size_t s = 0; s < slots; ++s) {
        BigInt d = 1;
        for (const auto& [p, exps] : parts) {
            if (s < exps.size()) d *= pow_ui(p, exps[s]);
        }
        if (!d.fits_ulong_p())
            throw std::invalid_argument("canonicalize: invariant factor exceeds 64 bits");
        desc.push_back(d.get_ui());
    }
    factors_.assign(desc.rbegin(), desc.rend()); // ascending divisibility chain
}

BigInt AbelianGroup::order() const {
    BigInt o = 1;
    for (std::uint64_t d : factors_) o *= BigInt(static_cast<unsigned long>(d));
    return o;
}

std::vector<std::uint64_t> AbelianGroup::primes() const {
    if (factors_.empty()) return {};
    // every prime of the order divides the largest invariant factor
    std::vector<std::uint64_t> out;
    for (auto [p, m] : factorize_u64(factors_.back())) {
        (void)m;
        out.push_back(p);
    }
    return out;
}

PrimaryType AbelianGroup::primary_part(std::uint64_t ell) const {
    if (!is_prime_u64(ell)) throw std::invalid_argument("primary_part: ell must be prime");
    std::vector<unsigned> exps;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        unsigned v = valuation_u64(*it, ell);
        if (v == 0) break; // divisibility chain: once ell is gone it stays gone
        exps.push_back(v);
    }
    return PrimaryType(ell, std::move(exps));
}

unsigned AbelianGroup::rank(std::uint64_t ell, unsigned k) const {
    return primary_part(ell).rank(k);
}

AbelianGroup AbelianGroup::direct_product(const AbelianGroup& other) const {
    std::vector<std::uint64_t> orders = factors_;
    orders.insert(orders.end(), other.factors_.begin(), other.factors_.end());
    return AbelianGroup(orders);
}

std::string AbelianGroup::to_string() const {
    if (factors_.empty()) return "C1";
    std::string out;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        if (!out.empty()) out += "x";
        out += "C" + std::to_string(*it);
    }
    return out;
}

namespace {

std::uint64_t parse_order_token(std::string tok) {
    if (!tok.empty() && (tok[0] == 'c' || tok[0] == 'C')) tok.erase(tok.begin());
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("group spec: bad order token");
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
    if (errno != 0 || end != tok.c_str() + tok.size())
        throw std::invalid_argument("group spec: order out of range");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) { out.push_back(cur); cur.clear(); }
        else cur += c;
    }
    out.push_back(cur);
    return out;
}

} // namespace

AbelianGroup parse_group_spec(const std::string& spec) {
    std::string s;
    for (char c : spec) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    std::string lower = s;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "1" || lower == "c1" || lower == "trivial") return AbelianGroup();
    if (s.empty()) throw std::invalid_argument("group spec: empty");

    char sep = s.find(',') != std::string::npos ? ',' : 'x';
    std::vector<std::uint64_t> orders;
    for (const std::string& tok : split(lower, sep)) {
        std::uint64_t d = parse_order_token(tok);
        if (d <= 1) throw std::invalid_argument("group spec: cyclic orders must be >= 2");
        orders.push_back(d);
    }
    return AbelianGroup(orders);
}

} // namespace ffcond
