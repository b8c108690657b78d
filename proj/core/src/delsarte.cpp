#include "ffcond/delsarte.hpp"

#include <cassert>

namespace ffcond {

BigInt fg_eval(const PrimaryType& T, const std::vector<BigInt>& t) {
    unsigned e = T.exponent_index();
    if (t.size() != e)
        throw std::invalid_argument("fg_eval: need one evaluation point per rank level");
    BigInt ell(static_cast<unsigned long>(T.prime()));
    BigInt acc = 1;
    for (unsigned k = 1; k <= e; ++k) {
        unsigned rk = T.rank(k), rk1 = T.rank(k + 1);
        acc *= pow_ui(t[k - 1], rk1);
        for (unsigned j = rk1; j < rk; ++j) acc *= t[k - 1] - pow_ui(ell, j);
    }
    return acc;
}

BigInt inj_count(const PrimaryType& T, const RankVector& A) {
    if (T.prime() != A.prime)
        throw std::invalid_argument("inj_count: prime mismatch between T and A");
    unsigned e = T.exponent_index();
    // a rank drop below T at any level already rules out an embedding; the
    // polynomial vanishes there too, but short-circuiting keeps the
    // nonnegative-count contract independent of that identity
    for (unsigned k = 1; k <= e; ++k) {
        if (A.at(k) < T.rank(k)) return 0;
    }
    std::vector<BigInt> t;
    t.reserve(e);
    BigInt ell(static_cast<unsigned long>(T.prime()));
    for (unsigned k = 1; k <= e; ++k) t.push_back(pow_ui(ell, A.at(k)));
    BigInt n = fg_eval(T, t);
#ifndef NDEBUG
    assert(n == inj_count_factored(T, A));
#endif
    return n;
}

BigInt inj_count_factored(const PrimaryType& T, const RankVector& A) {
    if (T.prime() != A.prime)
        throw std::invalid_argument("inj_count_factored: prime mismatch between T and A");
    BigInt ell(static_cast<unsigned long>(T.prime()));
    BigRat acc = 1;
    for (unsigned k = 1; k <= T.exponent_index(); ++k) {
        unsigned rkA = A.at(k), rkT = T.rank(k), rk1T = T.rank(k + 1);
        acc *= pow_si(ell, BigInt(static_cast<unsigned long>(rkA) * rkT));
        for (unsigned j = 0; j < T.rank_tilde(k); ++j) {
            long shift = static_cast<long>(rk1T) + static_cast<long>(j) - static_cast<long>(rkA);
            acc *= BigRat(1) - pow_si(ell, BigInt(shift));
        }
    }
    acc.canonicalize();
    if (acc.get_den() != 1)
        throw internal_error("inj_count_factored: non-integral result");
    return acc.get_num();
}

BigInt aut_count(const PrimaryType& T) {
    return fg_eval(T, [&] {
        std::vector<BigInt> t;
        BigInt ell(static_cast<unsigned long>(T.prime()));
        for (unsigned k = 1; k <= T.exponent_index(); ++k) t.push_back(pow_ui(ell, T.rank(k)));
        return t;
    }());
}

BigInt aut_count(const AbelianGroup& G) {
    BigInt acc = 1;
    for (std::uint64_t ell : G.primes()) acc *= aut_count(G.primary_part(ell));
    return acc;
}

BigInt subgroup_count(const PrimaryType& T, const RankVector& A) {
    BigInt inj = inj_count(T, A);
    BigInt aut = aut_count(T);
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), inj.get_mpz_t(), aut.get_mpz_t());
    if (r != 0)
        throw internal_error("subgroup_count: |Aut T| does not divide the injection count");
    return q;
}

BigInt subgroup_count_general(const AbelianGroup& G, const std::vector<RankVector>& A_parts) {
    BigInt acc = 1;
    for (std::uint64_t ell : G.primes()) {
        const RankVector* part = nullptr;
        for (const RankVector& rv : A_parts) {
            if (rv.prime == ell) { part = &rv; break; }
        }
        RankVector trivial_part(ell, {});
        acc *= subgroup_count(G.primary_part(ell), part ? *part : trivial_part);
        if (acc == 0) break;
    }
    return acc;
}

} // namespace ffcond
