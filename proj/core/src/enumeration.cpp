#include "ffcond/enumeration.hpp"

#include "ffcond/errors.hpp"
#include "ffcond/xn_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace ffcond {

SubgroupLattice::SubgroupLattice(ExplicitGroup G, std::uint64_t max_subgroups)
    : G_(std::move(G)) {
    subs_ = all_subgroups(G_, max_subgroups);
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t s = 0; s < subs_.size(); ++s) {
        index[subs_[s].elems] = s;
        if (subs_[s].size() == 1) trivial_ = s;
        if (subs_[s].size() == G_.order()) full_ = s;
    }
    join_.assign(subs_.size() * G_.order(), 0);
    for (std::size_t s = 0; s < subs_.size(); ++s) {
        for (std::uint32_t g = 0; g < G_.order(); ++g) {
            std::size_t j;
            if (subs_[s].contains(g)) {
                j = s;
            } else {
                std::vector<std::uint32_t> gens = subs_[s].elems;
                gens.push_back(g);
                auto it = index.find(closure(G_, gens).elems);
                if (it == index.end())
                    throw internal_error("SubgroupLattice: join left the lattice");
                j = it->second;
            }
            join_[s * G_.order() + g] = static_cast<std::uint32_t>(j);
        }
    }
}

BigInt count_surjections(const std::vector<std::uint64_t>& source_moduli,
                         const SubgroupLattice& target) {
    const ExplicitGroup& G = target.group();
    std::map<std::uint64_t, std::vector<std::uint32_t>> torsion;
    std::vector<BigInt> counts(target.size(), BigInt(0));
    counts[target.trivial_id()] = 1;
    BigInt expected(1);
    for (std::uint64_t m : source_moduli) {
        auto it = torsion.find(m);
        if (it == torsion.end())
            it = torsion.emplace(m, G.torsion_elements(m)).first;
        const std::vector<std::uint32_t>& tor = it->second;
        expected *= static_cast<unsigned long>(tor.size());
        std::vector<BigInt> next(target.size(), BigInt(0));
        for (std::size_t s = 0; s < counts.size(); ++s) {
            if (counts[s] == 0) continue;
            for (std::uint32_t u : tor)
                next[target.join_with_element(s, u)] += counts[s];
        }
        counts = std::move(next);
    }
    BigInt total(0);
    for (const BigInt& c : counts) total += c;
    if (total != expected)
        throw internal_error("count_surjections: homomorphism mass not conserved");
    return counts[target.full_id()];
}

namespace {

BigInt plain_walk(const SubgroupLattice& L,
                  const std::vector<const std::vector<std::uint32_t>*>& tor,
                  std::size_t pos, std::size_t span) {
    if (pos == tor.size()) return span == L.full_id() ? 1 : 0;
    BigInt c(0);
    for (std::uint32_t u : *tor[pos])
        c += plain_walk(L, tor, pos + 1, L.join_with_element(span, u));
    return c;
}

} // namespace

BigInt count_surjections_plain(const std::vector<std::uint64_t>& source_moduli,
                               const SubgroupLattice& target,
                               std::uint64_t max_homs) {
    const ExplicitGroup& G = target.group();
    std::map<std::uint64_t, std::vector<std::uint32_t>> torsion;
    std::vector<const std::vector<std::uint32_t>*> tor;
    BigInt total(1);
    for (std::uint64_t m : source_moduli) {
        auto it = torsion.find(m);
        if (it == torsion.end())
            it = torsion.emplace(m, G.torsion_elements(m)).first;
        total *= static_cast<unsigned long>(it->second.size());
    }
    if (total > BigInt(max_homs))
        throw resource_limit_error("count_surjections_plain: too many homomorphisms");
    for (std::uint64_t m : source_moduli) tor.push_back(&torsion.at(m));
    return plain_walk(target, tor, 0, target.trivial_id());
}

BigInt aut_order_oracle(const AbelianGroup& G, std::uint64_t max_subgroups) {
    ExplicitGroup Gx(G.invariant_factors());
    SubgroupLattice L(std::move(Gx), max_subgroups);
    return count_surjections(G.invariant_factors(), L);
}

namespace {

/* generator-image search for injections T -> A. Candidate images for the
   i-th generator are A[ell^{lambda_i}]; a prefix survives iff the socle
   projections ell^{lambda_i - 1} a_i stay independent, tracked as the exact
   F_ell-span built so far. */
struct inj_search {
    explicit inj_search(const ExplicitGroup& group) : A(group) {}

    const ExplicitGroup& A;
    std::uint64_t ell = 2;
    std::vector<unsigned> lambda;
    std::vector<const std::vector<std::uint32_t>*> tor;
    std::vector<const std::vector<std::uint32_t>*> proj;
    std::vector<const std::vector<std::uint64_t>*> fiber;
    std::vector<std::uint8_t> span_mask;
    std::vector<std::uint32_t> span_list;
    std::uint64_t work = 0;
    std::uint64_t max_work = 0;
    bool leaf_shortcut = true;
    BigInt count{0};

    // collect mode
    std::vector<std::uint32_t> picks;
    std::set<std::vector<std::uint32_t>>* images = nullptr;
    std::uint64_t max_images = 0;

    void charge(std::uint64_t w) {
        work += w;
        if (work > max_work)
            throw resource_limit_error("injection search exceeded work cap");
    }

    void push_span(std::uint32_t v) {
        std::size_t base = span_list.size();
        charge(base * (ell - 1));
        for (std::uint64_t c = 1; c < ell; ++c) {
            std::uint32_t cv = A.scalar_mul(c, v);
            for (std::size_t i = 0; i < base; ++i) {
                std::uint32_t e = A.add(span_list[i], cv);
                span_mask[e] = 1;
                span_list.push_back(e);
            }
        }
    }

    void pop_span(std::size_t base) {
        while (span_list.size() > base) {
            span_mask[span_list.back()] = 0;
            span_list.pop_back();
        }
    }

    void rec(std::size_t depth) {
        if (depth == lambda.size()) {
            count += 1;
            return;
        }
        const std::vector<std::uint32_t>& cand = *tor[depth];
        if (leaf_shortcut && depth + 1 == lambda.size()) {
            // candidates whose projection already lies in the span are the
            // only rejects; count them through the fiber sizes
            charge(span_list.size() + 1);
            std::uint64_t bad = 0;
            for (std::uint32_t w : span_list) bad += (*fiber[depth])[w];
            count += static_cast<unsigned long>(cand.size() - bad);
            return;
        }
        charge(cand.size());
        const std::vector<std::uint32_t>& pr = *proj[depth];
        for (std::uint32_t a : cand) {
            std::uint32_t v = pr[a];
            if (span_mask[v]) continue;
            std::size_t base = span_list.size();
            push_span(v);
            rec(depth + 1);
            pop_span(base);
        }
    }

    void rec_collect(std::size_t depth) {
        if (depth == lambda.size()) {
            SubgroupHandle H = closure(A, picks);
            charge(H.size());
            if (images->insert(H.elems).second && images->size() > max_images)
                throw resource_limit_error("enumerate_subgroups: too many images");
            count += 1;
            return;
        }
        const std::vector<std::uint32_t>& cand = *tor[depth];
        charge(cand.size());
        const std::vector<std::uint32_t>& pr = *proj[depth];
        for (std::uint32_t a : cand) {
            std::uint32_t v = pr[a];
            if (span_mask[v]) continue;
            std::size_t base = span_list.size();
            picks.push_back(a);
            push_span(v);
            rec_collect(depth + 1);
            pop_span(base);
            picks.pop_back();
        }
    }
};

struct inj_tables {
    std::map<unsigned, std::vector<std::uint32_t>> tor;
    std::map<unsigned, std::vector<std::uint32_t>> proj;
    std::map<unsigned, std::vector<std::uint64_t>> fiber;
};

void build_inj_search(inj_search& s, inj_tables& tabs,
                      const ExplicitGroup& A, const PrimaryType& T) {
    s.ell = T.prime();
    s.lambda = T.exponents();
    for (unsigned lam : s.lambda) {
        if (tabs.tor.find(lam) == tabs.tor.end()) {
            std::uint64_t m = pow_ui(s.ell, lam).get_ui();
            std::uint64_t mprev = m / s.ell;
            tabs.tor[lam] = A.torsion_elements(m);
            std::vector<std::uint32_t> pr(A.order());
            for (std::uint32_t x = 0; x < A.order(); ++x)
                pr[x] = A.scalar_mul(mprev, x);
            std::vector<std::uint64_t> fib(A.order(), 0);
            for (std::uint32_t a : tabs.tor[lam]) ++fib[pr[a]];
            tabs.proj[lam] = std::move(pr);
            tabs.fiber[lam] = std::move(fib);
        }
        s.tor.push_back(&tabs.tor[lam]);
        s.proj.push_back(&tabs.proj[lam]);
        s.fiber.push_back(&tabs.fiber[lam]);
    }
    s.span_mask.assign(A.order(), 0);
    s.span_mask[0] = 1;
    s.span_list = {0};
}

BigInt count_injections_impl(const ExplicitGroup& A, const PrimaryType& T,
                             std::uint64_t max_work, bool shortcut) {
    if (T.is_trivial()) return 1;
    if (T.order() > BigInt(A.order())) return 0;
    inj_tables tabs;
    inj_search s{A};
    s.max_work = max_work;
    s.leaf_shortcut = shortcut;
    build_inj_search(s, tabs, A, T);
    s.rec(0);
    return s.count;
}

} // namespace

BigInt count_injections(const ExplicitGroup& A, const PrimaryType& T,
                        std::uint64_t max_work) {
    return count_injections_impl(A, T, max_work, true);
}

BigInt count_injections_plain(const ExplicitGroup& A, const PrimaryType& T,
                              std::uint64_t max_work) {
    return count_injections_impl(A, T, max_work, false);
}

std::vector<SubgroupHandle> enumerate_subgroups(const ExplicitGroup& A,
                                                const PrimaryType& T,
                                                const EnumerationCaps& caps) {
    std::set<std::vector<std::uint32_t>> images;
    BigInt scanned(0);
    if (T.order() > BigInt(A.order())) return {};
    if (T.is_trivial()) {
        images.insert({0});
        scanned = 1;
    } else {
        inj_tables tabs;
        inj_search s{A};
        s.max_work = caps.max_work;
        s.leaf_shortcut = false;
        s.images = &images;
        s.max_images = caps.max_subgroups;
        build_inj_search(s, tabs, A, T);
        s.rec_collect(0);
        scanned = s.count;
    }
    // every image is hit once per isomorphism T -> image
    BigInt aut = aut_order_oracle(T.to_group(), caps.max_subgroups);
    if (scanned != BigInt(static_cast<unsigned long>(images.size())) * aut)
        throw internal_error("enumerate_subgroups: image multiplicity is not |Aut T|");
    std::vector<SubgroupHandle> out;
    out.reserve(images.size());
    for (const std::vector<std::uint32_t>& e : images)
        out.push_back(SubgroupHandle{e});
    return out;
}

std::vector<SubgroupHandle> enumerate_subgroups(const ExplicitGroup& A,
                                                const AbelianGroup& T,
                                                const EnumerationCaps& caps) {
    std::vector<SubgroupHandle> acc{SubgroupHandle{{0}}};
    for (std::uint64_t ell : T.primes()) {
        std::vector<SubgroupHandle> part =
            enumerate_subgroups(A, T.primary_part(ell), caps);
        std::vector<SubgroupHandle> next;
        next.reserve(acc.size() * part.size());
        for (const SubgroupHandle& a : acc) {
            for (const SubgroupHandle& h : part) {
                std::vector<std::uint32_t> gens = a.elems;
                gens.insert(gens.end(), h.elems.begin(), h.elems.end());
                next.push_back(closure(A, gens));
            }
        }
        if (next.size() > caps.max_subgroups)
            throw resource_limit_error("enumerate_subgroups: too many images");
        acc = std::move(next);
    }
    return acc;
}

namespace {

struct kernel_search {
    kernel_search(const ExplicitGroup& x, const ExplicitGroup& g, const SubgroupLattice& l)
        : X(x), G(g), L(l) {}

    const ExplicitGroup& X;
    const ExplicitGroup& G;
    const SubgroupLattice& L;
    std::vector<const std::vector<std::uint32_t>*> tor; // per X-coordinate
    std::vector<std::uint32_t> picks;
    std::set<std::vector<std::uint32_t>> kernels;
    BigInt surjections{0};

    void kernel_of_current() {
        // scaled[i][d] = image of d * e_i under the chosen homomorphism
        std::vector<std::vector<std::uint32_t>> scaled(X.num_coords());
        for (std::size_t i = 0; i < X.num_coords(); ++i) {
            scaled[i].resize(X.modulus(i));
            for (std::uint64_t d = 0; d < X.modulus(i); ++d)
                scaled[i][d] = G.scalar_mul(d, picks[i]);
        }
        std::vector<std::uint32_t> elems;
        walk(0, 0, 0, scaled, elems);
        std::sort(elems.begin(), elems.end());
        kernels.insert(std::move(elems));
    }

    void walk(std::size_t i, std::uint32_t idx, std::uint32_t phi,
              const std::vector<std::vector<std::uint32_t>>& scaled,
              std::vector<std::uint32_t>& elems) {
        if (i == X.num_coords()) {
            if (phi == 0) elems.push_back(idx);
            return;
        }
        std::uint32_t cu = X.coordinate_unit(i);
        for (std::uint64_t d = 0; d < X.modulus(i); ++d)
            walk(i + 1, idx + static_cast<std::uint32_t>(d) * cu,
                 G.add(phi, scaled[i][d]), scaled, elems);
    }

    void rec(std::size_t pos, std::size_t span) {
        if (pos == tor.size()) {
            if (span == L.full_id()) {
                surjections += 1;
                kernel_of_current();
            }
            return;
        }
        for (std::uint32_t u : *tor[pos]) {
            picks.push_back(u);
            rec(pos + 1, L.join_with_element(span, u));
            picks.pop_back();
        }
    }
};

} // namespace

std::vector<SubgroupHandle> quotient_kernels(const ExplicitGroup& X,
                                             const AbelianGroup& G,
                                             const EnumerationCaps& caps) {
    ExplicitGroup Gx(G.invariant_factors(), caps.max_elements);
    SubgroupLattice L(std::move(Gx), caps.max_subgroups);

    std::map<std::uint64_t, std::vector<std::uint32_t>> torsion;
    BigInt total(1);
    for (std::size_t i = 0; i < X.num_coords(); ++i) {
        std::uint64_t m = X.modulus(i);
        auto it = torsion.find(m);
        if (it == torsion.end())
            it = torsion.emplace(m, L.group().torsion_elements(m)).first;
        total *= static_cast<unsigned long>(it->second.size());
    }
    if (total > BigInt(caps.max_homs))
        throw resource_limit_error("quotient_kernels: too many homomorphisms");

    kernel_search ks{X, L.group(), L};
    for (std::size_t i = 0; i < X.num_coords(); ++i)
        ks.tor.push_back(&torsion.at(X.modulus(i)));
    ks.rec(0, L.trivial_id());

    // the DP must see the same surjection count, and the fibers over distinct
    // kernels all have size |Aut G|
    std::vector<std::uint64_t> moduli;
    for (std::size_t i = 0; i < X.num_coords(); ++i) moduli.push_back(X.modulus(i));
    if (ks.surjections != count_surjections(moduli, L))
        throw internal_error("quotient_kernels: walk and DP disagree");
    BigInt aut = count_surjections(G.invariant_factors(), L);
    if (ks.surjections != BigInt(static_cast<unsigned long>(ks.kernels.size())) * aut)
        throw internal_error("quotient_kernels: kernel multiplicity is not |Aut G|");

    std::vector<SubgroupHandle> out;
    out.reserve(ks.kernels.size());
    for (const std::vector<std::uint32_t>& e : ks.kernels)
        out.push_back(SubgroupHandle{e});
    return out;
}

BigInt count_quotients(const ExplicitGroup& X, const AbelianGroup& G,
                       const EnumerationCaps& caps) {
    std::vector<SubgroupHandle> kernels = quotient_kernels(X, G, caps);
    for (const SubgroupHandle& V : kernels)
        if (quotient_type(X, V) != G)
            throw internal_error("count_quotients: census type mismatch");
    return BigInt(static_cast<unsigned long>(kernels.size()));
}

BigInt brute_Z(const LocalField& F, const AbelianGroup& G, long n,
               const EnumerationCaps& caps) {
    XnModel model(F, G.exponent(), n, caps.max_elements);
    ExplicitGroup Gx(G.invariant_factors(), caps.max_elements);
    SubgroupLattice L(std::move(Gx), caps.max_subgroups);
    std::vector<std::uint64_t> moduli;
    for (std::size_t i = 0; i < model.group().num_coords(); ++i)
        moduli.push_back(model.group().modulus(i));
    BigInt sur = count_surjections(moduli, L);
    BigInt aut = count_surjections(G.invariant_factors(), L);
    BigInt z, r;
    mpz_fdiv_qr(z.get_mpz_t(), r.get_mpz_t(), sur.get_mpz_t(), aut.get_mpz_t());
    if (r != 0)
        throw internal_error("brute_Z: surjection count not divisible by |Aut G|");
    return z;
}

BigInt brute_D(const LocalField& F, const AbelianGroup& G, long n,
               const EnumerationCaps& caps) {
    XnModel model(F, G.exponent(), n, caps.max_elements);
    std::vector<SubgroupHandle> kernels = quotient_kernels(model.group(), G, caps);
    BigInt d(0);
    for (const SubgroupHandle& V : kernels)
        if (model.discriminant_exponent(V) <= n) d += 1;
    return d;
}

} // namespace ffcond
