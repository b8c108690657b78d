#include "ffcond/conductor.hpp"

#include "ffcond/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffcond {

namespace {

// {m/d} for integer m and d > 0, via the nonnegative remainder; exact in [0,1)
BigRat frac_quot(const BigInt& m, const BigInt& d) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
    return make_rat(r, d);
}

// d(m,k) = {m/p^k} - {m/p^{k-1}}
BigRat delta_term(const BigInt& m, const BigInt& p, unsigned k) {
    BigInt pk1 = pow_ui(p, k - 1);
    return frac_quot(m, pk1 * p) - frac_quot(m, pk1);
}

} // namespace

std::uint64_t rank_un(const LocalField& F, long n, unsigned k) {
    if (n < 1) throw std::invalid_argument("rank_un: n must be >= 1");
    if (k < 1) throw std::invalid_argument("rank_un: k must be >= 1");
    BigInt m(n - 1);
    BigInt pk1 = pow_ui(BigInt(F.p()), k - 1);
    BigInt r = (floor_div(m, pk1) - floor_div(m, pk1 * F.p())) * F.f();
    return static_cast<std::uint64_t>(r.get_ui());
}

std::uint64_t rank_xn(const LocalField& F, unsigned exp_index, long n, unsigned k) {
    if (k < 1 || k > exp_index)
        throw std::invalid_argument("rank_xn: k out of range");
    return 1 + rank_un(F, n, k);
}

BigRat alpha_p(const PrimaryType& T) {
    BigInt p(T.prime());
    BigRat a(0);
    for (unsigned k = 1; k <= T.exponent_index(); ++k)
        a += make_rat(BigInt(T.rank(k)) * (p - 1), pow_ui(p, k));
    return a;
}

BigRat delta_g(const PrimaryType& T, const BigInt& n) {
    BigInt p(T.prime());
    BigInt m = n - 1;
    BigRat d = -alpha_p(T);
    for (unsigned k = 1; k <= T.exponent_index(); ++k)
        d += BigRat(T.rank(k)) * delta_term(m, p, k);
    return d;
}

BigRat delta_g(const PrimaryType& T, long n) { return delta_g(T, BigInt(n)); }

BigRat epsilon_factor(const PrimaryType& T, const LocalField& F, long n) {
    if (!T.is_trivial() && T.prime() != F.p())
        throw std::invalid_argument("epsilon_factor: prime mismatch");
    if (n < 1) throw std::invalid_argument("epsilon_factor: n must be >= 1");
    BigInt p(F.p());
    unsigned e = T.exponent_index();
    BigRat acc(1);
    for (unsigned k = 1; k <= e; ++k) {
        std::uint64_t rx = rank_xn(F, e, n, k);
        // the same rank through the fractional-part identity
        BigRat alt = BigRat(F.f()) *
                     (make_rat((p - 1) * (n - 1), pow_ui(p, k)) + delta_term(BigInt(n - 1), p, k));
        if (BigRat(BigInt(rx) - 1) != alt)
            throw internal_error("epsilon_factor: rank identity failed");
        unsigned rt = T.rank_tilde(k);
        std::uint64_t r_next = T.rank(k + 1);
        for (unsigned j = 0; j < rt; ++j) {
            BigInt expo = BigInt(r_next) + j - BigInt(rx);
            acc *= BigRat(1) - pow_si(p, expo);
        }
    }
    if (acc < 0 || acc > 1)
        throw internal_error("epsilon_factor: value outside [0,1]");
    return acc;
}

CountBreakdown count_conductor_p(const LocalField& F, const PrimaryType& T, long n) {
    if (!T.is_trivial() && T.prime() != F.p())
        throw std::invalid_argument("count_conductor_p: T must be a p-group for p = F.p()");
    if (n < 1) throw std::invalid_argument("count_conductor_p: n must be >= 1");

    BigInt p(F.p());
    unsigned e = T.exponent_index();

    RankVector rx{F.p(), {}};
    for (unsigned k = 1; k <= e; ++k)
        rx.ranks.push_back(static_cast<unsigned>(rank_xn(F, e, n, k)));

    CountBreakdown bd;
    bd.n = n;
    bd.Z = subgroup_count(T, rx);
    bd.alpha = alpha_p(T);
    bd.delta = delta_g(T, n);
    bd.epsilon = epsilon_factor(T, F, n);
    BigInt aut = aut_count(T);
    bd.leading_coeff = make_rat(T.order(), aut);
    bd.exponent_check = BigRat(n) * bd.alpha + bd.delta;

    // log_p |Hom(T, X_n)| = sum_k r_k(T) r_k(X_n) must equal
    // f*(n*alpha + delta) + log_p |T|, and Z * |Aut T| = p^that_sum * epsilon
    BigInt S(0);
    for (unsigned k = 1; k <= e; ++k)
        S += BigInt(T.rank(k)) * rx.at(k);
    BigInt log_ord(0);
    for (unsigned lam : T.exponents()) log_ord += lam;
    if (BigRat(F.f()) * bd.exponent_check + BigRat(log_ord) != BigRat(S))
        throw internal_error("count_conductor_p: exponent bookkeeping failed");
    BigRat lhs(bd.Z * aut);
    if (lhs != pow_si(p, S) * bd.epsilon)
        throw internal_error("count_conductor_p: decomposition identity failed");
    if ((bd.Z == 0) != (bd.epsilon == 0))
        throw internal_error("count_conductor_p: epsilon vanishing disagrees with Z");
    return bd;
}

BigInt closed_form_elementary(const LocalField& F, unsigned r, long n) {
    if (r < 1) throw std::invalid_argument("closed_form_elementary: r must be >= 1");
    if (n < 1) throw std::invalid_argument("closed_form_elementary: n must be >= 1");
    BigInt p(F.p());
    PrimaryType T(F.p(), std::vector<unsigned>(r, 1));

    BigRat alpha = make_rat(BigInt(r) * (p - 1), p);
    BigRat delta = (n % static_cast<long>(F.p()) == 0)
                       ? BigRat(0)
                       : BigRat(r) * (frac_quot(BigInt(n), p) - 1);

    // exponent of q in every epsilon factor: (p-1)(n-1)/p + {(n-1)/p}
    BigRat E = make_rat((p - 1) * (n - 1), p) + frac_quot(BigInt(n - 1), p);
    BigRat fE = BigRat(F.f()) * E;
    if (!is_integer(fE))
        throw internal_error("closed_form_elementary: non-integral q-exponent");
    BigRat eps(1);
    for (unsigned j = 0; j < r; ++j)
        eps *= BigRat(1) - pow_si(p, BigInt(j) - 1 - fE.get_num());

    BigRat lead = make_rat(T.order(), aut_count(T));
    BigRat growth = BigRat(F.f()) * (BigRat(n) * alpha + delta);
    if (!is_integer(growth))
        throw internal_error("closed_form_elementary: non-integral growth exponent");
    BigRat z = lead * pow_si(p, growth.get_num()) * eps;
    if (!is_integer(z))
        throw internal_error("closed_form_elementary: non-integral count");
    return z.get_num();
}

BigInt closed_form_cyclic(const LocalField& F, unsigned r, long n) {
    if (r < 1) throw std::invalid_argument("closed_form_cyclic: r must be >= 1");
    if (n < 1) throw std::invalid_argument("closed_form_cyclic: n must be >= 1");
    BigInt p(F.p());
    BigInt pr = pow_ui(p, r);

    BigRat alpha = make_rat(pr - 1, pr);
    BigInt m(n - 1);
    BigRat delta = (BigInt(n) % pr == 0) ? BigRat(0) : frac_quot(BigInt(n), pr) - 1;

    // single epsilon factor 1 - p^{-1} / q^{E}; f*E is the top-level unit rank
    BigRat E = make_rat((p - 1) * m, pr) + frac_quot(m, pr) - frac_quot(m, pr / p);
    BigRat fE = BigRat(F.f()) * E;
    if (!is_integer(fE))
        throw internal_error("closed_form_cyclic: non-integral q-exponent");
    BigRat eps = BigRat(1) - pow_si(p, -1 - fE.get_num());

    BigRat lead = make_rat(p, p - 1);
    BigRat growth = BigRat(F.f()) * (BigRat(n) * alpha + delta);
    if (!is_integer(growth))
        throw internal_error("closed_form_cyclic: non-integral growth exponent");
    BigRat z = lead * pow_si(p, growth.get_num()) * eps;
    if (!is_integer(z))
        throw internal_error("closed_form_cyclic: non-integral count");
    return z.get_num();
}

BigInt tame_factor(const PrimaryType& Gl, const BigInt& q) {
    if (q < 2) throw std::invalid_argument("tame_factor: q must be >= 2");
    if (Gl.is_trivial()) return 1;
    BigInt ell(Gl.prime());
    if (mpz_divisible_p(q.get_mpz_t(), ell.get_mpz_t()))
        throw std::invalid_argument("tame_factor: ell divides q");
    std::size_t s = Gl.num_generators();
    if (s >= 3) return 0;
    unsigned a = Gl.exponents()[0];
    unsigned b = (s == 2) ? Gl.exponents()[1] : 0;
    unsigned v = static_cast<unsigned>(valuation(q - 1, Gl.prime()));
    unsigned d = std::min(a, v);
    if (d < b) return 0;
    if (a == b || d == 0) return 1;
    // now a > b and d >= max(1, b)
    if (a > d) return pow_ui(ell, d - b);
    return (ell + 1) * pow_ui(ell, d - b - 1); // a == d > b
}

bool realizable(const AbelianGroup& G, const LocalField& F) {
    for (std::uint64_t ell : G.primes()) {
        if (ell == F.p()) continue;
        PrimaryType Gl = G.primary_part(ell);
        if (Gl.num_generators() >= 3) return false;
        if (Gl.num_generators() == 2 &&
            Gl.exponents()[1] > valuation(F.q() - 1, ell))
            return false;
    }
    return true;
}

CountBreakdown count_conductor(const LocalField& F, const AbelianGroup& G, long n) {
    if (n < 1) throw std::invalid_argument("count_conductor: n must be >= 1");
    PrimaryType Gp = G.primary_part(F.p());
    CountBreakdown bd = count_conductor_p(F, Gp, n);

    BigInt q = F.q();
    BigInt tame(1);
    for (std::uint64_t ell : G.primes()) {
        if (ell == F.p()) continue;
        tame *= tame_factor(G.primary_part(ell), q);
        if (tame == 0) break;
    }

    BigInt Zp = bd.Z;
    bd.Z = Zp * tame;
    bd.leading_coeff *= tame;
    bd.realizable = realizable(G, F);
    if ((tame != 0) != bd.realizable)
        throw internal_error("count_conductor: tame factor disagrees with realizability");

    // independent recount straight from the rank profile of X_n:
    // p-part ranks 1 + rk(U_n), every other prime contributes
    // Z x C_{q-1} truncated at the exponent of G_ell
    std::vector<RankVector> profile;
    for (std::uint64_t ell : G.primes()) {
        RankVector rv{ell, {}};
        if (ell == F.p()) {
            unsigned e = Gp.exponent_index();
            for (unsigned k = 1; k <= e; ++k)
                rv.ranks.push_back(static_cast<unsigned>(rank_xn(F, e, n, k)));
        } else {
            unsigned a = G.primary_part(ell).exponents()[0];
            std::uint64_t v = valuation(q - 1, ell);
            for (unsigned k = 1; k <= a; ++k)
                rv.ranks.push_back(1 + (k <= v ? 1 : 0));
        }
        profile.push_back(std::move(rv));
    }
    if (subgroup_count_general(G, profile) != bd.Z)
        throw internal_error("count_conductor: factored and direct counts differ");

    // the tame multiplier never exceeds the subgroup count of C_{q-1} x C_{q-1},
    // so Z <= (q-1)q/2 * Z_p; kept as a cheap sanity bound
    if (BigInt(2) * bd.Z > (q - 1) * q * Zp && Zp > 0)
        throw internal_error("count_conductor: tame bound violated");
    return bd;
}

} // namespace ffcond
