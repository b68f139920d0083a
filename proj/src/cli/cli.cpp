#include "weiltate/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weiltate/bounds.hpp"
#include "weiltate/cmlab.hpp"
#include "weiltate/error.hpp"
#include "weiltate/tate.hpp"
#include "weiltate/weil.hpp"

#ifndef WEILTATE_VERSION
#define WEILTATE_VERSION "0.0.0"
#endif

namespace weiltate::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int schema_version = 1;

struct Context {
    bool json = false;
    bool timing = false;
    unsigned precision = Real::default_bits;
    unsigned threads = 0;
};

struct Report {
    std::string command;
    json inputs = json::object();
    json rows = json::array();
    json summary = json::object();
    std::string text;
};

// A verify mismatch is not an Error kind of the library.
struct VerifyMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// input parsing

Integer parse_integer(const std::string& s, const std::string& what) {
    static const std::regex pattern("-?[0-9]+");
    if (!std::regex_match(s, pattern)) fail(ErrorKind::Parse, what + ": expected an integer, got '" + s + "'");
    return Integer(s);
}

unsigned long parse_positive(const std::string& s, const std::string& what) {
    const Integer v = parse_integer(s, what);
    if (v < 1 || !v.fits_ulong_p()) fail(ErrorKind::InvalidArgument, what + " must be a positive integer");
    return v.get_ui();
}

long parse_long(const std::string& s, const std::string& what) {
    const Integer v = parse_integer(s, what);
    if (!v.fits_slong_p()) fail(ErrorKind::InvalidArgument, what + " out of range");
    return v.get_si();
}

Real parse_real(const std::string& s, const std::string& what, unsigned bits) {
    try {
        return Real(s, bits);
    } catch (const Error&) {
        fail(ErrorKind::Parse, what + ": expected a decimal number, got '" + s + "'");
    }
}

std::vector<Integer> parse_integer_list(const std::string& s, const std::string& what) {
    std::vector<Integer> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_integer(item, what));
    if (s.back() == ',') fail(ErrorKind::Parse, what + ": trailing comma");
    return out;
}

std::string fmt(const Real& x) { return x.to_string(30); }

json nullable(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

std::string hint(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "polynomials and curves are comma-separated integers, constant term first (e.g. 5,-3,1)";
        case ErrorKind::NotMonic: return "give det(T - Frob) with leading coefficient 1, or pass --paper-convention for 1 - aT + ... input";
        case ErrorKind::NotPrimePower: return "--q must be a prime power";
        case ErrorKind::OddDegree: return "a Weil polynomial has even degree 2d >= 2";
        case ErrorKind::FunctionalEquationFails: return "coefficients must satisfy c_0 = q^d and c_(2d-j) q^(2d-j) = q^d c_j";
        case ErrorKind::RootModulusFails: return "every root must have absolute value sqrt(q); check the coefficients and q";
        case ErrorKind::MismatchedField: return "all factors must be over the same field F_q";
        case ErrorKind::UnsupportedDiscriminant: return "supported CM discriminants: -3 -4 -7 -8 -11 -19 -43 -67 -163";
        case ErrorKind::BudgetExceeded: return "lower the limit; see --help for the budgets";
        case ErrorKind::PrecisionInsufficient: return "raise --precision";
        case ErrorKind::Internal: return "this is a bug; please report the command line";
        default: return "check the arguments against --help";
    }
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BudgetExceeded: return exit_budget;
        case ErrorKind::Internal:
        case ErrorKind::PrecisionInsufficient: return exit_internal;
        default: return exit_input;
    }
}

// ---------------------------------------------------------------------------
// tate

struct TateArgs {
    std::string poly;
    std::string q;
    std::optional<unsigned long> n_max;
    bool paper_convention = false;
};

Report tate_report(const TateArgs& a) {
    Report r;
    r.command = "tate";
    r.inputs["poly"] = a.poly;
    r.inputs["q"] = a.q;
    r.inputs["n_max"] = a.n_max ? json(*a.n_max) : json(nullptr);
    r.inputs["paper_convention"] = a.paper_convention;

    IntPoly f = parse_poly(a.poly);
    if (a.paper_convention) f = f.reciprocal();
    const Integer q = parse_integer(a.q, "--q");
    const WeilPoly w = validate_weil(f, q);
    const TateProfile prof = tate_profile(w, a.n_max);

    r.summary["poly"] = format_poly(w.poly());
    if (a.paper_convention) r.summary["poly_paper"] = format_poly(reciprocal_convention(w.poly()));
    r.summary["q"] = prof.q.get_str();
    r.summary["p"] = w.p().get_str();
    r.summary["d"] = prof.d;
    r.summary["n_report"] = prof.n_report;

    std::ostringstream t;
    t << "Weil polynomial " << pretty_poly(w.poly()) << " over F_" << prof.q << " (d = " << prof.d << ")\n";
    if (a.paper_convention) t << "paper convention: " << format_poly(reciprocal_convention(w.poly())) << "\n";
    t << "dims for n = 1.." << prof.n_report << "\n";
    for (const TateRow& row : prof.rows) {
        json dims = json::array();
        for (const auto& [n, dim] : row.dims) dims.push_back(json::array({n, dim}));
        json jr;
        jr["k"] = row.k;
        jr["dims"] = std::move(dims);
        jr["stable_dim"] = row.stable_dim;
        jr["min_stable_degree"] = row.min_stable_degree.get_str();
        jr["degree_bound"] = row.degree_bound.get_str();
        r.rows.push_back(std::move(jr));

        t << "k = " << row.k << ": stable_dim " << row.stable_dim << ", min_stable_degree " << row.min_stable_degree
          << ", degree_bound " << row.degree_bound << "\n ";
        for (const auto& [n, dim] : row.dims) t << ' ' << n << ':' << dim;
        t << "\n";
    }
    r.text = t.str();
    return r;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorKind::Parse, "'" + path + "' is not a JSON report: " + e.what());
    }
}

Report tate_verify(const std::string& path) {
    const json old = read_json_file(path);
    if (!old.is_object() || old.value("command", "") != "tate" || !old.contains("inputs"))
        fail(ErrorKind::Parse, "'" + path + "' is not a tate report");
    if (old.value("schema", 0) != schema_version)
        fail(ErrorKind::Parse, "unsupported report schema in '" + path + "'");
    TateArgs a;
    try {
        const json& in = old.at("inputs");
        a.poly = in.at("poly").get<std::string>();
        a.q = in.at("q").get<std::string>();
        if (!in.at("n_max").is_null()) a.n_max = in.at("n_max").get<unsigned long>();
        a.paper_convention = in.at("paper_convention").get<bool>();
    } catch (const json::exception& e) {
        fail(ErrorKind::Parse, std::string("report inputs incomplete: ") + e.what());
    }
    Report fresh = tate_report(a);
    std::vector<std::string> diffs;
    if (old.value("rows", json()) != fresh.rows) diffs.push_back("rows");
    if (old.value("summary", json()) != fresh.summary) diffs.push_back("summary");

    Report r;
    r.command = "tate-verify";
    r.inputs["report"] = path;
    r.summary["verified"] = diffs.empty();
    r.summary["mismatched_fields"] = diffs;
    if (!diffs.empty()) {
        std::string msg = "report differs from recomputation in:";
        for (const auto& d : diffs) msg += " " + d;
        throw VerifyMismatch(msg);
    }
    r.text = "verify: ok (" + std::to_string(fresh.rows.size()) + " rows recomputed)\n";
    return r;
}

// ---------------------------------------------------------------------------
// bounds

struct FieldArgs {
    std::string nk = "1";
    std::optional<std::string> disc;
    std::optional<std::string> log_disc;
    std::string exceptional = "no";

    void attach(CLI::App* app) {
        app->add_option("--nk", nk, "degree n_K of the base field")->capture_default_str();
        app->add_option("--disc", disc, "|d_K| as an integer");
        app->add_option("--log-disc", log_disc, "log |d_K| as a decimal");
        app->add_option("--exceptional", exceptional, "exceptional zero: yes, no or unknown")->capture_default_str();
    }

    FieldParams build(unsigned bits) const {
        const unsigned long n = parse_positive(nk, "--nk");
        const ExceptionalZero z = parse_exceptional_zero(exceptional);
        if (disc && log_disc) fail(ErrorKind::InvalidArgument, "give at most one of --disc and --log-disc");
        if (disc) return FieldParams::from_abs_disc(n, parse_integer(*disc, "--disc"), z, bits);
        FieldParams fp{n, log_disc ? parse_real(*log_disc, "--log-disc", bits) : Real(0L, bits), z};
        fp.validate();
        return fp;
    }
};

json bound_json(const BoundReport& b) {
    json j;
    j["name"] = b.name;
    json in = json::object();
    for (const auto& [k, v] : b.inputs) in[k] = v;
    j["inputs"] = std::move(in);
    j["unnormalized"] = b.unnormalized;
    j["log_value"] = fmt(b.log_value);
    j["value_approx"] = exp(b.log_value).to_string(12);
    j["exact_value"] = b.exact_value ? json(b.exact_value->get_str()) : json(nullptr);
    if (!b.branches.empty()) {
        json br = json::array();
        for (const auto& x : b.branches) br.push_back({{"name", x.name}, {"log_value", fmt(x.log_value)}});
        j["branches"] = std::move(br);
        j["active_branch"] = b.active_branch;
    }
    return j;
}

std::string bound_text(const BoundReport& b) {
    std::ostringstream t;
    t << b.name << "\n";
    for (const auto& [k, v] : b.inputs) t << "  " << k << " = " << v << "\n";
    if (!b.unnormalized.empty()) {
        t << "  unnormalized constants:";
        for (const auto& c : b.unnormalized) t << ' ' << c;
        t << "\n";
    }
    for (const auto& x : b.branches)
        t << "  branch " << x.name << ": log = " << fmt(x.log_value) << (x.name == b.active_branch ? "  (active)" : "")
          << "\n";
    t << "log_value = " << fmt(b.log_value) << "\n";
    t << "value ~ " << exp(b.log_value).to_string(12) << "\n";
    if (b.exact_value) t << "exact_value (ceiling) = " << *b.exact_value << "\n";
    return t.str();
}

Report scalar_report(const std::string& name, json inputs, const Real& value) {
    Report r;
    r.command = "bounds";
    r.inputs = inputs;
    json row;
    row["name"] = name;
    row["inputs"] = std::move(inputs);
    row["value"] = fmt(value);
    r.rows.push_back(std::move(row));
    r.text = name + " = " + fmt(value) + "\n";
    return r;
}

Report bound_report(json inputs, const BoundReport& b) {
    Report r;
    r.command = "bounds";
    r.inputs = std::move(inputs);
    r.rows.push_back(bound_json(b));
    r.text = bound_text(b);
    return r;
}

json field_inputs(const FieldArgs& f) {
    json j;
    j["nk"] = f.nk;
    j["disc"] = nullable(f.disc);
    j["log_disc"] = nullable(f.log_disc);
    j["exceptional"] = f.exceptional;
    return j;
}

// ---------------------------------------------------------------------------
// cm

json row_json(const SurveyRow& row) {
    json j;
    j["p"] = row.p;
    j["kronecker"] = row.kronecker ? json(*row.kronecker) : json(nullptr);
    j["a_p"] = row.a_p ? json(*row.a_p) : json(nullptr);
    j["reduction_type"] = to_string(row.reduction);
    j["rank_base"] = row.rank_base ? json(*row.rank_base) : json(nullptr);
    j["rank_stable"] = row.rank_stable ? json(*row.rank_stable) : json(nullptr);
    j["stable_degree"] = row.stable_degree ? json(row.stable_degree->get_str()) : json(nullptr);
    return j;
}

std::string row_header(bool with_kronecker) {
    std::ostringstream t;
    t << std::setw(9) << "p";
    if (with_kronecker) t << std::setw(5) << "kr";
    t << std::setw(8) << "a_p" << "  " << std::left << std::setw(14) << "reduction" << std::right << std::setw(6)
      << "base" << std::setw(7) << "stable" << std::setw(7) << "degree" << "\n";
    return t.str();
}

std::string row_text(const SurveyRow& row, bool with_kronecker) {
    std::ostringstream t;
    const auto opt = [](const auto& v) {
        std::ostringstream s;
        if (v) s << *v;
        else s << '-';
        return s.str();
    };
    t << std::setw(9) << row.p;
    if (with_kronecker) t << std::setw(5) << opt(row.kronecker);
    t << std::setw(8) << opt(row.a_p) << "  " << std::left << std::setw(14) << to_string(row.reduction) << std::right
      << std::setw(6) << opt(row.rank_base) << std::setw(7) << opt(row.rank_stable) << std::setw(7)
      << opt(row.stable_degree) << "\n";
    return t.str();
}

json density_json(const std::vector<DensityClass>& cs) {
    json a = json::array();
    for (const auto& c : cs) {
        json j;
        j["name"] = c.name;
        j["count"] = c.count;
        j["fraction"] = c.fraction;
        j["reference"] = c.reference ? json(*c.reference) : json(nullptr);
        a.push_back(std::move(j));
    }
    return a;
}

std::string density_text(const std::vector<DensityClass>& cs) {
    std::ostringstream t;
    for (const auto& c : cs) {
        t << "  " << std::left << std::setw(14) << c.name << std::right << std::setw(9) << c.count << "  fraction "
          << std::fixed << std::setprecision(6) << c.fraction;
        if (c.reference) t << "  reference " << std::setprecision(2) << *c.reference;
        t << "\n";
    }
    return t.str();
}

// ---------------------------------------------------------------------------

json to_json(const Report& r, const Context& ctx, std::optional<double> ms) {
    json j;
    j["schema"] = schema_version;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["rows"] = r.rows;
    j["summary"] = r.summary;
    json meta;
    meta["tool"] = "weiltate";
    meta["version"] = WEILTATE_VERSION;
    meta["precision_bits"] = ctx.precision;
    if (ms) meta["timing_ms"] = *ms;
    j["meta"] = std::move(meta);
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tate classes of abelian varieties over finite fields, effective bounds and CM experiments", "weiltate"};
    app.set_version_flag("--version", std::string(WEILTATE_VERSION));
    app.require_subcommand(1);
    // Subcommands inherit this, so global flags may follow the subcommand.
    app.fallthrough();
    Context ctx;
    app.add_flag("--json", ctx.json, "emit the machine-readable report");
    app.add_flag("--timing", ctx.timing, "include wall-clock timing in the report");

    std::function<Report()> action;

    // tate
    TateArgs ta;
    std::optional<std::string> verify_path;
    std::optional<std::string> n_max_text;
    CLI::App* tate = app.add_subcommand("tate", "Tate class dimensions of a Weil polynomial");
    tate->add_option("--poly", ta.poly, "coefficients, constant term first, e.g. 25,0,10,0,1");
    tate->add_option("--q", ta.q, "field size q");
    tate->add_option("--n-max", n_max_text, "report extension degrees n = 1..n-max");
    tate->add_flag("--paper-convention", ta.paper_convention, "--poly is prod(1 - alpha_i T) instead of det(T - Frob)");
    tate->add_option("--verify", verify_path, "recompute a saved --json tate report and compare");
    tate->callback([&] {
        action = [&]() -> Report {
            if (verify_path) return tate_verify(*verify_path);
            if (ta.poly.empty() || ta.q.empty()) fail(ErrorKind::InvalidArgument, "--poly and --q are required");
            if (n_max_text) ta.n_max = parse_positive(*n_max_text, "--n-max");
            return tate_report(ta);
        };
    });

    // bounds
    CLI::App* bounds = app.add_subcommand("bounds", "effective bounds in log space");
    bounds->require_subcommand(1);
    bounds->add_option("--precision", ctx.precision, "working precision in bits")->capture_default_str();

    FieldArgs fk_field;
    CLI::App* fk = bounds->add_subcommand("fk", "f(K)");
    fk_field.attach(fk);
    fk->callback([&] {
        action = [&] {
            return scalar_report("f_of_K", field_inputs(fk_field), f_of_K(fk_field.build(ctx.precision), ctx.precision));
        };
    });

    std::string h_nl, h_primes;
    CLI::App* hensel = bounds->add_subcommand("hensel", "Hensel bound on log d_L");
    hensel->add_option("--nl", h_nl, "degree n_L")->required();
    hensel->add_option("--primes", h_primes, "ramified primes, comma separated");
    hensel->callback([&] {
        action = [&] {
            json in;
            in["nl"] = h_nl;
            in["primes"] = h_primes;
            return scalar_report("hensel_log_disc", in,
                                 hensel_log_disc(parse_positive(h_nl, "--nl"), parse_integer_list(h_primes, "--primes"),
                                                 ctx.precision));
        };
    });

    std::string g_nl, g_nk, g_primes, g_log_dk = "0";
    CLI::App* galois = bounds->add_subcommand("hensel-galois", "Hensel bound for L/K Galois");
    galois->add_option("--nl", g_nl, "degree n_L")->required();
    galois->add_option("--nk", g_nk, "degree n_K")->required();
    galois->add_option("--log-dk", g_log_dk, "log d_K")->capture_default_str();
    galois->add_option("--primes", g_primes, "primes of Q below the ramified primes of K, comma separated");
    galois->callback([&] {
        action = [&] {
            json in;
            in["nl"] = g_nl;
            in["nk"] = g_nk;
            in["log_dk"] = g_log_dk;
            in["primes"] = g_primes;
            return scalar_report("hensel_galois_log_disc", in,
                                 hensel_galois_log_disc(parse_positive(g_nl, "--nl"), parse_positive(g_nk, "--nk"),
                                                        parse_real(g_log_dk, "--log-dk", ctx.precision),
                                                        parse_integer_list(g_primes, "--primes"), ctx.precision));
        };
    });

    FieldArgs ns_field;
    std::optional<std::string> ns_dl, ns_log_dl;
    std::string ns_n = "2", ns_c = "1";
    CLI::App* nonsplit = bounds->add_subcommand("nonsplit", "least prime not splitting completely");
    ns_field.attach(nonsplit);
    nonsplit->add_option("--dl", ns_dl, "|d_L| as an integer");
    nonsplit->add_option("--log-dl", ns_log_dl, "log |d_L|");
    nonsplit->add_option("--n", ns_n, "relative degree [L:K]")->capture_default_str();
    nonsplit->add_option("--c", ns_c, "absolute constant c")->capture_default_str();
    nonsplit->callback([&] {
        action = [&] {
            if (ns_dl.has_value() == ns_log_dl.has_value())
                fail(ErrorKind::InvalidArgument, "give exactly one of --dl and --log-dl");
            json in = field_inputs(ns_field);
            in["dl"] = nullable(ns_dl);
            in["log_dl"] = nullable(ns_log_dl);
            in["n"] = ns_n;
            in["c"] = ns_c;
            const Real log_dl = ns_dl ? log_integer(parse_integer(*ns_dl, "--dl"), ctx.precision)
                                      : parse_real(*ns_log_dl, "--log-dl", ctx.precision);
            return bound_report(in, least_nonsplit_bound(ns_field.build(ctx.precision), log_dl,
                                                         parse_positive(ns_n, "--n"),
                                                         parse_real(ns_c, "--c", ctx.precision), ctx.precision));
        };
    });

    FieldArgs b_field;
    std::string b_N, b_m = "1", b_d;
    CLI::App* bB = bounds->add_subcommand("B", "bound B(N, K, m, d)");
    bB->add_option("--N", b_N, "conductor N")->required();
    b_field.attach(bB);
    bB->add_option("--m", b_m, "m")->capture_default_str();
    bB->add_option("--d", b_d, "d")->required();
    bB->callback([&] {
        action = [&] {
            json in;
            in["N"] = b_N;
            const json field = field_inputs(b_field);
            for (auto& [k, v] : field.items()) in[k] = v;
            in["m"] = b_m;
            in["d"] = b_d;
            return bound_report(in, main_lemma_bound_B(parse_integer(b_N, "--N"), b_field.build(ctx.precision),
                                                       parse_integer(b_m, "--m"), parse_integer(b_d, "--d"),
                                                       ctx.precision));
        };
    });

    FieldArgs c_field;
    std::string c_N, c_d, c_c = "1", c_c1 = "1";
    std::optional<std::string> c_df, c_log_df;
    CLI::App* bC = bounds->add_subcommand("C", "bound C(N, d, F, K)");
    bC->add_option("--N", c_N, "conductor N")->required();
    bC->add_option("--d", c_d, "dimension d")->required();
    bC->add_option("--df", c_df, "|d_F| as an integer");
    bC->add_option("--log-df", c_log_df, "log d_F");
    c_field.attach(bC);
    bC->add_option("--c", c_c, "absolute constant c")->capture_default_str();
    bC->add_option("--c1", c_c1, "absolute constant c1")->capture_default_str();
    bC->callback([&] {
        action = [&] {
            if (c_df.has_value() == c_log_df.has_value())
                fail(ErrorKind::InvalidArgument, "give exactly one of --df and --log-df");
            json in;
            in["N"] = c_N;
            in["d"] = c_d;
            in["df"] = nullable(c_df);
            in["log_df"] = nullable(c_log_df);
            const json field = field_inputs(c_field);
            for (auto& [k, v] : field.items()) in[k] = v;
            in["c"] = c_c;
            in["c1"] = c_c1;
            const Real log_df = c_df ? log(Real(parse_integer(*c_df, "--df"), ctx.precision))
                                     : parse_real(*c_log_df, "--log-df", ctx.precision);
            return bound_report(in, theorem1_bound_C(parse_integer(c_N, "--N"), parse_positive(c_d, "--d"), log_df,
                                                     c_field.build(ctx.precision),
                                                     parse_real(c_c, "--c", ctx.precision),
                                                     parse_real(c_c1, "--c1", ctx.precision), ctx.precision));
        };
    });

    // cm
    CLI::App* cm = app.add_subcommand("cm", "CM and non-CM experiments over rational primes");
    cm->require_subcommand(1);
    cm->add_option("--threads", ctx.threads, "worker threads (0: automatic)");

    std::string sv_disc, sv_pmax;
    bool summary_only = false;
    CLI::App* survey = cm->add_subcommand("survey", "E x E survey for a CM curve");
    survey->add_option("--disc", sv_disc, "CM discriminant")->required();
    survey->add_option("--pmax", sv_pmax, "largest prime")->required();
    survey->add_flag("--summary-only", summary_only, "omit per-prime rows");
    survey->callback([&] {
        action = [&] {
            const long D = parse_long(sv_disc, "--disc");
            const Survey s = exe_survey(D, parse_positive(sv_pmax, "--pmax"), ctx.threads);
            Report r;
            r.command = "cm survey";
            r.inputs["disc"] = sv_disc;
            r.inputs["pmax"] = sv_pmax;
            r.inputs["summary_only"] = summary_only;
            std::ostringstream t;
            if (!summary_only) {
                t << row_header(true);
                for (const auto& row : s.rows) {
                    r.rows.push_back(row_json(row));
                    t << row_text(row, true);
                }
            }
            const DensityReport& d = s.density;
            r.summary["p_max"] = d.p_max;
            r.summary["good_primes"] = d.good_primes;
            r.summary["excluded_primes"] = d.excluded_primes;
            r.summary["splitting"] = density_json(d.splitting);
            r.summary["ranks"] = density_json(d.ranks);
            r.summary["note"] = d.note;
            t << "good primes " << d.good_primes << ", excluded " << d.excluded_primes << "\n"
              << density_text(d.splitting) << density_text(d.ranks) << d.note << "\n";
            r.text = t.str();
            return r;
        };
    });

    std::string nc_curve, nc_pmax, nc_label;
    CLI::App* noncm = cm->add_subcommand("noncm", "E x E ranks for a curve by point counting");
    noncm->add_option("--curve", nc_curve, "a1,a2,a3,a4,a6")->required();
    noncm->add_option("--pmax", nc_pmax, "largest prime")->required();
    noncm->add_option("--label", nc_label, "free-form label");
    noncm->callback([&] {
        action = [&] {
            const NonCmReport rep =
                noncm_rank_check(parse_curve(nc_curve, nc_label), parse_positive(nc_pmax, "--pmax"), ctx.threads);
            Report r;
            r.command = "cm noncm";
            r.inputs["curve"] = nc_curve;
            r.inputs["label"] = nc_label;
            r.inputs["pmax"] = nc_pmax;
            std::ostringstream t;
            t << row_header(false);
            for (const auto& row : rep.rows) {
                r.rows.push_back(row_json(row));
                t << row_text(row, false);
            }
            r.summary["discriminant"] = rep.curve.discriminant().get_str();
            r.summary["good_primes"] = rep.good_primes;
            r.summary["all_base_rank_4"] = rep.all_base_rank_4;
            r.summary["exceptional_primes"] = rep.exceptional_primes;
            t << "good primes " << rep.good_primes << ", rank_base 4 at all: " << (rep.all_base_rank_4 ? "yes" : "no")
              << "\nprimes with rank_stable > 4:";
            for (auto p : rep.exceptional_primes) t << ' ' << p;
            t << "\n";
            r.text = t.str();
            return r;
        };
    });

    std::string ls_disc, ls_c = "1";
    CLI::App* lsearch = cm->add_subcommand("nonsplit", "least prime inert in Q(sqrt D)");
    lsearch->add_option("--disc", ls_disc, "fundamental discriminant")->required();
    lsearch->add_option("--c", ls_c, "absolute constant c")->capture_default_str();
    lsearch->callback([&] {
        action = [&] {
            const NonsplitResult res = least_nonsplit_search(parse_long(ls_disc, "--disc"),
                                                             FieldParams::rationals(ctx.precision),
                                                             parse_real(ls_c, "--c", ctx.precision));
            Report r;
            r.command = "cm nonsplit";
            r.inputs["disc"] = ls_disc;
            r.inputs["c"] = ls_c;
            r.summary["found_prime"] = res.found_prime;
            r.summary["theoretical_log_bound"] = fmt(res.bound.log_value);
            r.summary["satisfied"] = res.satisfied;
            r.rows.push_back(bound_json(res.bound));
            std::ostringstream t;
            t << "least non-split prime: " << res.found_prime << "\n"
              << "bound ~ " << exp(res.bound.log_value).to_string(12) << " (log " << fmt(res.bound.log_value) << ")\n"
              << "satisfied: " << (res.satisfied ? "yes" : "no") << "\n";
            r.text = t.str();
            return r;
        };
    });

    std::string pk_disc, pk_x;
    CLI::App* pik = cm->add_subcommand("pik", "prime ideal count of Q(sqrt D) against Li(x)");
    pik->add_option("--disc", pk_disc, "fundamental discriminant")->required();
    pik->add_option("--x", pk_x, "norm bound")->required();
    pik->callback([&] {
        action = [&] {
            const Integer x = parse_integer(pk_x, "--x");
            if (x < 0 || !x.fits_ulong_p()) fail(ErrorKind::InvalidArgument, "--x must be a nonnegative integer");
            const PiKCount c = pi_K_count(parse_long(pk_disc, "--disc"), x.get_ui());
            Report r;
            r.command = "cm pik";
            r.inputs["disc"] = pk_disc;
            r.inputs["x"] = pk_x;
            r.summary["count"] = c.count;
            r.summary["li_x"] = c.li_x;
            r.summary["ratio"] = c.ratio ? json(*c.ratio) : json(nullptr);
            std::ostringstream t;
            t << "pi_K(" << c.x << ") = " << c.count << "\nLi(x) = " << std::setprecision(12) << c.li_x << "\nratio = ";
            if (c.ratio) t << *c.ratio;
            else t << "-";
            t << "\n";
            r.text = t.str();
            return r;
        };
    });

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    const auto emit_error = [&](const std::string& kind, const std::string& message, const std::string& fix) {
        err << "error: " << kind << ": " << message << "\n";
        if (!fix.empty()) err << "hint: " << fix << "\n";
        if (ctx.json) {
            json j;
            j["schema"] = schema_version;
            j["error"] = {{"kind", kind}, {"message", message}, {"hint", fix}};
            out << j.dump(2) << "\n";
        }
    };

    try {
        const auto start = std::chrono::steady_clock::now();
        const Report r = action();
        std::optional<double> ms;
        if (ctx.timing)
            ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (ctx.json) {
            out << to_json(r, ctx, ms).dump(2) << "\n";
        } else {
            out << r.text;
            if (ms) out << "time: " << std::fixed << std::setprecision(1) << *ms << " ms\n";
        }
        return exit_ok;
    } catch (const Error& e) {
        emit_error(std::string(to_string(e.kind())), e.what(), hint(e.kind()));
        return exit_code(e.kind());
    } catch (const VerifyMismatch& e) {
        emit_error("VerifyMismatch", e.what(), "the report was edited or produced by a different version");
        return exit_internal;
    } catch (const std::exception& e) {
        emit_error("InternalError", e.what(), hint(ErrorKind::Internal));
        return exit_internal;
    }
}

}  // namespace weiltate::cli
