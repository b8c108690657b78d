#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffcond/conductor.hpp"
#include "ffcond/discriminant.hpp"
#include "ffcond/enumeration.hpp"
#include "ffcond/errors.hpp"
#include "ffcond/xn_model.hpp"

namespace ffcond::cli {

using ordered_json = nlohmann::ordered_json;

std::string decimal_string(const BigRat& x, unsigned digits) {
    BigInt num = x.get_num();
    const BigInt& den = x.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt ip = num / den;
    BigInt rem = num - ip * den;
    std::string s = ip.get_str();
    if (neg) s.insert(s.begin(), '-');
    if (rem == 0) return s;
    s += '.';
    for (unsigned i = 0; i < digits && rem != 0; ++i) {
        rem *= 10;
        BigInt d = rem / den;
        rem -= d * den;
        s += static_cast<char>('0' + d.get_ui());
    }
    return s;
}

namespace {

struct field_flags {
    std::uint64_t p = 0;
    unsigned f = 1;
    std::uint64_t q = 0;
};

void add_field_flags(CLI::App* sub, field_flags& ff) {
    auto* p_opt =
        sub->add_option("--p", ff.p, "residue characteristic, a prime");
    auto* f_opt =
        sub->add_option("--f", ff.f, "residue degree, q = p^f (default 1)");
    sub->add_option("--q", ff.q, "residue field size, factored into p^f")
        ->excludes(p_opt)
        ->excludes(f_opt);
}

LocalField resolve_field(const field_flags& ff) {
    if (ff.q != 0) return LocalField::from_q(ff.q);
    if (ff.p == 0)
        throw std::invalid_argument("field spec required: --p [--f] or --q");
    return LocalField(ff.p, ff.f);
}

/* all output is built in memory first; --out failures are I/O errors */
int emit(const std::string& text, const std::string& out_path,
         std::ostream& out, std::ostream& err) {
    if (out_path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        err << "cannot open " << out_path << " for writing\n";
        return 2;
    }
    f << text;
    f.flush();
    if (!f) {
        err << "write to " << out_path << " failed\n";
        return 2;
    }
    return 0;
}

std::string field_label(const LocalField& F) {
    std::ostringstream os;
    os << "q=" << F.q() << " (p=" << F.p() << ", f=" << F.f() << ")";
    return os.str();
}

int cmd_count(const LocalField& F, const AbelianGroup& G, long n, bool json,
              const std::string& out_path, std::ostream& out,
              std::ostream& err) {
    CountBreakdown bd = count_conductor(F, G, n);
    std::ostringstream os;
    if (json) {
        ordered_json j;
        j["p"] = F.p();
        j["f"] = F.f();
        j["q"] = F.q_u64();
        j["group"] = G.to_string();
        j["n"] = n;
        j["Z"] = to_string(bd.Z);
        j["alpha_p"] = rat_string(bd.alpha);
        j["delta"] = rat_string(bd.delta);
        j["epsilon"] = rat_string(bd.epsilon);
        j["leading_coeff"] = rat_string(bd.leading_coeff);
        j["realizable"] = bd.realizable;
        os << j.dump(2) << "\n";
    } else {
        os << "count: " << field_label(F) << ", G=" << G.to_string()
           << ", n=" << n << "\n";
        os << "  Z             = " << to_string(bd.Z) << "\n";
        os << "  alpha_p       = " << rat_string(bd.alpha) << "  ("
           << decimal_string(bd.alpha) << ")\n";
        os << "  delta         = " << rat_string(bd.delta) << "  ("
           << decimal_string(bd.delta) << ")\n";
        os << "  epsilon       = " << rat_string(bd.epsilon) << "  ("
           << decimal_string(bd.epsilon) << ")\n";
        os << "  leading_coeff = " << rat_string(bd.leading_coeff) << "  ("
           << decimal_string(bd.leading_coeff) << ")\n";
        os << "  Z = leading_coeff * q^(n*alpha_p + delta) * epsilon, "
           << "n*alpha_p + delta = " << rat_string(bd.exponent_check) << "\n";
        os << "  realizable    = " << (bd.realizable ? "true" : "false")
           << "\n";
    }
    return emit(os.str(), out_path, out, err);
}

std::string sweep_csv(const std::vector<CountBreakdown>& rows) {
    std::ostringstream os;
    os << "n,Z,alpha_p,alpha_p_decimal,delta,delta_decimal,"
          "epsilon,epsilon_decimal,leading_coeff,leading_coeff_decimal,"
          "realizable\n";
    for (const CountBreakdown& bd : rows) {
        os << bd.n << ',' << to_string(bd.Z) << ',' << rat_string(bd.alpha)
           << ',' << decimal_string(bd.alpha) << ',' << rat_string(bd.delta)
           << ',' << decimal_string(bd.delta) << ',' << rat_string(bd.epsilon)
           << ',' << decimal_string(bd.epsilon) << ','
           << rat_string(bd.leading_coeff) << ','
           << decimal_string(bd.leading_coeff) << ','
           << (bd.realizable ? "true" : "false") << "\n";
    }
    return os.str();
}

std::string sweep_json(const std::vector<CountBreakdown>& rows) {
    ordered_json arr = ordered_json::array();
    for (const CountBreakdown& bd : rows) {
        ordered_json j;
        j["n"] = bd.n;
        j["Z"] = to_string(bd.Z);
        j["alpha_p"] = rat_string(bd.alpha);
        j["alpha_p_decimal"] = decimal_string(bd.alpha);
        j["delta"] = rat_string(bd.delta);
        j["delta_decimal"] = decimal_string(bd.delta);
        j["epsilon"] = rat_string(bd.epsilon);
        j["epsilon_decimal"] = decimal_string(bd.epsilon);
        j["leading_coeff"] = rat_string(bd.leading_coeff);
        j["leading_coeff_decimal"] = decimal_string(bd.leading_coeff);
        j["realizable"] = bd.realizable;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

int cmd_sweep(const LocalField& F, const AbelianGroup& G, long n_max,
              bool json, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
    std::vector<CountBreakdown> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (long n = 1; n <= n_max; ++n)
        rows.push_back(count_conductor(F, G, n));
    return emit(json ? sweep_json(rows) : sweep_csv(rows), out_path, out, err);
}

enum class check_state { pass, fail, skip };

const char* state_name(check_state s) {
    switch (s) {
        case check_state::pass: return "PASS";
        case check_state::fail: return "FAIL";
        default: return "SKIP";
    }
}

/* resource exhaustion is a skip; any other throw is a failure with the
   reason recorded */
template <typename Fn>
check_state run_check(Fn&& fn, std::vector<std::string>& notes) {
    try {
        return fn() ? check_state::pass : check_state::fail;
    } catch (const resource_limit_error&) {
        return check_state::skip;
    } catch (const std::exception& ex) {
        notes.emplace_back(ex.what());
        return check_state::fail;
    }
}

int cmd_verify(const LocalField& F, const AbelianGroup& G, long n_max,
               std::uint64_t cap, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
    EnumerationCaps caps;
    caps.max_elements = cap;
    bool p_primary = !G.is_trivial();
    for (std::uint64_t ell : G.primes())
        if (ell != F.p()) p_primary = false;

    std::ostringstream os;
    os << "verify: " << field_label(F) << ", G=" << G.to_string() << ", n=1.."
       << n_max << ", element cap " << cap << "\n";
    unsigned fails = 0, skips = 0;
    for (long n = 1; n <= n_max; ++n) {
        std::vector<std::string> notes;
        check_state formula = run_check(
            [&] { return count_conductor(F, G, n).Z == brute_Z(F, G, n, caps); },
            notes);
        check_state duality = run_check(
            [&] {
                XnModel X(F, G.exponent(), n, caps.max_elements);
                BigInt quot = count_quotients(X.group(), G, caps);
                std::size_t subs = enumerate_subgroups(X.group(), G, caps).size();
                return quot == BigInt(static_cast<unsigned long>(subs));
            },
            notes);
        check_state breakdown = run_check(
            [&] {
                CountBreakdown bd = count_conductor(F, G, n);
                BigRat e = BigRat(F.f()) * bd.exponent_check;
                if (!is_integer(e)) return false;
                return BigRat(bd.Z) == bd.leading_coeff *
                                           pow_si(BigInt(F.p()), e.get_num()) *
                                           bd.epsilon;
            },
            notes);
        check_state disc = check_state::skip;
        if (p_primary)
            disc = run_check(
                [&] {
                    PrimaryType T = G.primary_part(F.p());
                    BigInt bound = disc_upper_bound(F, T, n);
                    if (!bound.fits_slong_p())
                        throw resource_limit_error("disc bound exceeds long");
                    BigInt d = brute_D(F, G, bound.get_si(), caps);
                    return d >= count_conductor_p(F, T, n).Z;
                },
                notes);
        os << "n=" << n << " formula_vs_oracle=" << state_name(formula)
           << " duality=" << state_name(duality)
           << " breakdown=" << state_name(breakdown)
           << " disc_bound=" << state_name(disc);
        for (const std::string& note : notes) os << "  [" << note << "]";
        os << "\n";
        for (check_state s : {formula, duality, breakdown, disc}) {
            if (s == check_state::fail) ++fails;
            if (s == check_state::skip) ++skips;
        }
    }
    os << "verify: " << 4 * n_max << " checks, " << fails << " FAIL, " << skips
       << " SKIP\n";
    int rc = emit(os.str(), out_path, out, err);
    if (rc != 0) return rc;
    return fails == 0 ? 0 : 3;
}

int cmd_disc(const LocalField& F, const AbelianGroup& G, long n,
             std::uint64_t cap, bool json, const std::string& out_path,
             std::ostream& out, std::ostream& err) {
    if (G.is_trivial())
        throw std::invalid_argument("disc: group must be nontrivial");
    for (std::uint64_t ell : G.primes())
        if (ell != F.p())
            throw std::invalid_argument(
                "disc: group must be a p-group for p = residue characteristic");
    PrimaryType T = G.primary_part(F.p());
    BigRat r = rho(T);
    BigRat beta = beta_p(T);
    BigInt upper = disc_upper_bound(F, T, n);
    DiscLowerBound lo = disc_lower_bound_data(F, T, n);

    EnumerationCaps caps;
    caps.max_elements = cap;
    std::optional<BigInt> exact;
    try {
        exact = brute_D(F, G, n, caps);
    } catch (const resource_limit_error&) {
    }

    std::ostringstream os;
    if (json) {
        ordered_json j;
        j["p"] = F.p();
        j["f"] = F.f();
        j["q"] = F.q_u64();
        j["group"] = G.to_string();
        j["n"] = n;
        j["rho"] = rat_string(r);
        j["beta_p"] = rat_string(beta);
        j["disc_upper"] = to_string(upper);
        j["n_tilde"] = lo.n_tilde;
        j["lower_bound_Z"] = to_string(lo.Z);
        if (exact)
            j["brute_D"] = to_string(*exact);
        else
            j["brute_D"] = nullptr;
        os << j.dump(2) << "\n";
    } else {
        os << "disc: " << field_label(F) << ", G=" << G.to_string()
           << ", n=" << n << "\n";
        os << "  rho           = " << rat_string(r) << "  ("
           << decimal_string(r) << ")\n";
        os << "  beta_p        = " << rat_string(beta) << "  ("
           << decimal_string(beta) << ")\n";
        os << "  disc_upper    = " << to_string(upper)
           << "  (conductor exponent <= " << n
           << " forces discriminant exponent <= " << to_string(upper) << ")\n";
        if (lo.valid) {
            os << "  n_tilde       = " << lo.n_tilde << "\n";
            os << "  lower_bound_Z = " << to_string(lo.Z)
               << "  (number of extensions with discriminant exponent <= " << n
               << " is at least the count at conductor level " << lo.n_tilde
               << ")\n";
        } else {
            os << "  n_tilde       = none  (n below |G|-1 + rho threshold)\n";
            os << "  lower_bound_Z = 0  (bound vacuous at this n)\n";
        }
        if (exact)
            os << "  brute_D       = " << to_string(*exact) << "\n";
        else
            os << "  brute_D       = skipped  (model exceeds element cap "
               << cap << ")\n";
    }
    return emit(os.str(), out_path, out, err);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"abelian extension counts over local function fields F_q((t))",
                 "ffcond"};
    app.require_subcommand(1);

    field_flags ff;
    std::string group_spec;
    std::string out_path;
    long n = 0;
    long n_max = 0;
    std::uint64_t cap = kDefaultElementCap;
    bool json_flag = false;
    bool csv_flag = false;

    auto add_common = [&](CLI::App* sub, bool with_json) -> CLI::Option* {
        add_field_flags(sub, ff);
        sub->add_option("--group", group_spec,
                        "group spec, e.g. C4xC2 or 4,2 (C1 = trivial)")
            ->required();
        sub->add_option("--out", out_path, "write output to FILE");
        if (with_json) return sub->add_flag("--json", json_flag, "emit JSON");
        return nullptr;
    };

    CLI::App* count =
        app.add_subcommand("count", "Z(F,G;n) with its decomposition");
    add_common(count, true);
    count->add_option("--n", n, "conductor exponent bound, n >= 1")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* sweep =
        app.add_subcommand("sweep", "rows of Z(F,G;n) for n = 1..n-max");
    CLI::Option* sweep_json_opt = add_common(sweep, true);
    sweep->add_option("--n-max", n_max, "largest n")
        ->required()
        ->check(CLI::PositiveNumber);
    sweep->add_flag("--csv", csv_flag, "emit CSV (the default)")
        ->excludes(sweep_json_opt);

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check the formulas against the explicit model");
    add_common(verify, false);
    verify->add_option("--n-max", n_max, "largest n")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--cap", cap, "element cap for the explicit model");

    CLI::App* disc = app.add_subcommand(
        "disc", "discriminant bounds and the exact small-model count");
    add_common(disc, true);
    disc->add_option("--n", n, "conductor exponent bound, n >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    disc->add_option("--cap", cap, "element cap for the explicit model");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ffcond");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        LocalField F = resolve_field(ff);
        AbelianGroup G = parse_group_spec(group_spec);
        if (count->parsed())
            return cmd_count(F, G, n, json_flag, out_path, out, err);
        if (sweep->parsed())
            return cmd_sweep(F, G, n_max, json_flag, out_path, out, err);
        if (verify->parsed())
            return cmd_verify(F, G, n_max, cap, out_path, out, err);
        if (disc->parsed())
            return cmd_disc(F, G, n, cap, json_flag, out_path, out, err);
        err << "unknown subcommand\n";
        return 1;
    } catch (const std::exception& ex) {
        err << ex.what() << "\n";
        return 1;
    }
}

} // namespace ffcond::cli
