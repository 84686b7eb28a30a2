#include "cyclelift/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cyclelift/errors.hpp"
#include "cyclelift/identity.hpp"
#include "cyclelift/localcycles.hpp"
#include "cyclelift/serialize.hpp"
#include "cyclelift/sweeps.hpp"

namespace cyclelift::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20240229;

struct Config {
    std::string kind;
    std::int64_t delta = -2;
    std::int64_t db = 35;
    std::int64_t p = 5;
    std::int64_t max = 5000;
    std::int64_t mmax = -1;
    int radius = -1;
    int count = -1;
    int alpha_max = 4;
    int alpha = 0;
    std::int64_t classes = -1;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "json";
    std::string out_path;
    std::string sign = "minus";
    std::string b;
    bool ortho = false;
    int kappa = 3;
    std::int64_t level = 1;
    std::int64_t t = 1;
    std::int64_t chi_disc = 0;
    std::string in_path;
};

void emit(const Config& c, const std::string& text, std::ostream& out) {
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out_path);
    if (!f) throw HypothesisViolation("cannot write " + c.out_path);
    f << text;
}

std::string report_csv(const std::string& kind, const Report& r) {
    std::ostringstream s;
    s << "kind,checked,mismatches\n" << kind << ',' << r.checked << ',' << r.mismatches.size() << '\n';
    for (const auto& m : r.mismatches) {
        std::string cell = m.dump();
        std::string quoted;
        for (char ch : cell) quoted += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
        s << "mismatch,,\"" << quoted << "\"\n";
    }
    return s.str();
}

padic::LocalContext context_for(std::int64_t p, std::int64_t delta, int t_max, int radius) {
    return padic::LocalContext::make(p, delta, padic::LocalContext::default_precision(p, t_max, radius));
}

int cmd_verify(const Config& c, std::ostream& out) {
    Report r;
    json extra;
    if (c.kind == "rho") {
        r = sweeps::rho_sweep({c.delta}, c.max);
    } else if (c.kind == "r-formula") {
        const int radius = c.radius < 0 ? 6 : c.radius;
        const auto ctx = context_for(c.p, c.delta, 3, radius);
        const auto vecs = sweeps::random_anisotropic_vectors(ctx, c.count < 0 ? 50 : c.count, -1, 6, c.seed);
        r = sweeps::r_formula_sweep(vecs, radius);
        r.params.update({{"p", c.p}, {"delta", c.delta}, {"seed", c.seed}, {"precision", ctx.precision}});
    } else if (c.kind == "local-compare") {
        const auto ctx = context_for(c.p, c.delta, c.alpha_max, c.alpha_max + 2);
        auto seeds = sweeps::random_anisotropic_vectors(ctx, c.count < 0 ? 8 : c.count, -1, 0, c.seed);
        r = sweeps::local_compare_sweep(seeds, c.alpha_max);
        r.params.update({{"p", c.p}, {"delta", c.delta}, {"seed", c.seed}, {"precision", ctx.precision}});
    } else if (c.kind == "main-identity") {
        const auto f = quadfield::make_field(c.delta);
        r = identity::verify_main_theorem(f, c.db, c.mmax < 0 ? 300 : c.mmax);
    } else if (c.kind == "remark-identity") {
        const auto f = quadfield::make_field(c.delta);
        const std::int64_t classes = c.classes < 0 ? quadfield::optimal_embedding_count(f, c.db) : c.classes;
        auto rr = identity::verify_remark_identity(f, c.db, c.mmax < 0 ? 200 : c.mmax, classes);
        r = std::move(rr.report);
        extra["c_prime"] = identity::divisor_to_json(rr.c_prime);
        if (!rr.c_prime.is_zero()) r.mismatches.push_back({{"c_prime", extra["c_prime"]}});
    } else if (c.kind == "hilbert") {
        r = sweeps::hilbert_sweep(sweeps::random_rational_pairs(c.count < 0 ? 1000 : c.count, 100, c.seed));
        r.params["seed"] = c.seed;
    } else {
        throw HypothesisViolation("unknown verify kind '" + c.kind + "'");
    }
    r.params["kind"] = c.kind;
    if (c.format == "csv") {
        emit(c, report_csv(c.kind, r), out);
    } else {
        json j = r.to_json();
        if (!extra.is_null()) j.update(extra);
        emit(c, serialize::dump(j), out);
    }
    return r.ok() ? kOk : kMismatch;
}

int cmd_cycle(const Config& c, std::ostream& out) {
    if (c.b.empty()) throw HypothesisViolation("cycle: --b is required");
    // A first pass at full precision sizes the working precision.
    const auto probe_ctx = padic::LocalContext::make(c.p, c.delta, padic::LocalContext::max_precision(c.p));
    const auto probe = serialize::parse_vector(probe_ctx, c.b);
    const int ord = padic::ord_q(probe);
    const int depth = c.ortho ? c.alpha : std::max(ord + 1, 0);
    const int radius = c.radius < 0 ? depth : c.radius;
    const int t_max = std::max({std::abs(ord) / 2 + 1, probe.denom_exp(), 0});
    const auto ctx = context_for(c.p, c.delta, t_max, radius);
    const auto b = serialize::parse_vector(ctx, c.b);

    localcycles::LocalCycle z;
    json meta = {{"p", c.p}, {"delta", c.delta}, {"precision", ctx.precision}, {"ord_q", ord}};
    if (c.ortho) {
        const auto j = localcycles::make_orth_endo(c.alpha, b);
        z = localcycles::orthogonal_cycle(j);
        meta.update({{"alpha", c.alpha}, {"nu_p", j.nu_p}, {"kind", "orthogonal"}});
    } else {
        if (c.sign != "plus" && c.sign != "minus") throw HypothesisViolation("cycle: --sign must be plus or minus");
        const auto h = localcycles::make_special_hom(c.sign == "plus" ? localcycles::Sign::plus : localcycles::Sign::minus, b);
        z = localcycles::unitary_cycle(h);
        meta.update({{"sign", c.sign}, {"ord_qpm", h.ord_qpm}, {"kind", "unitary"}});
    }
    json j = serialize::to_json(z);
    j["params"] = meta;
    emit(c, serialize::dump(j), out);
    return kOk;
}

int cmd_lift(const Config& c, std::ostream& out) {
    json in;
    if (c.in_path.empty()) throw HypothesisViolation("lift: --in is required");
    {
        std::ifstream f(c.in_path);
        if (!f) throw HypothesisViolation("lift: cannot read " + c.in_path);
        try {
            in = json::parse(f);
        } catch (const json::exception& ex) {
            throw HypothesisViolation(std::string("lift: malformed JSON: ") + ex.what());
        }
    }
    qseries::ShimuraParams params = qseries::ShimuraParams::standard(c.kappa, c.level, c.t);
    if (c.chi_disc != 0) params.chi = qseries::Character::kronecker(c.chi_disc, 4 * c.level);
    const std::optional<std::int64_t> om = c.mmax < 0 ? std::nullopt : std::optional<std::int64_t>(c.mmax);
    const auto series = serialize::series_from_json(in);
    json j = std::visit(
        [&](const auto& s) {
            const auto lr = qseries::shimura_lift(s, params, om);
            json o = serialize::to_json(lr.series);
            json meta = {{"constant_policy", qseries::to_string(lr.policy)},
                         {"kappa", c.kappa}, {"level", c.level}, {"t", c.t}};
            meta["chi"] = c.chi_disc == 0 ? json("principal") : json(c.chi_disc);
            if (lr.policy == qseries::ConstantPolicy::unevaluated) {
                auto tmp = decltype(lr.series)(0);
                tmp.set(0, lr.a0);
                meta["unevaluated_a0"] = serialize::to_json(tmp)["coeffs"];
            }
            o["metadata"] = meta;
            return o;
        },
        series);
    emit(c, serialize::dump(j), out);
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Local special cycles, formal Shimura lifts and their identities"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("kind", c.kind, "rho | r-formula | local-compare | main-identity | remark-identity | hilbert")
        ->required()
        ->check(CLI::IsMember({"rho", "r-formula", "local-compare", "main-identity", "remark-identity", "hilbert"}));
    verify->add_option("--delta", c.delta, "Delta (negative, even, squarefree)");
    verify->add_option("--db", c.db, "quaternion discriminant D_B");
    verify->add_option("--p", c.p, "inert odd prime");
    verify->add_option("--max", c.max, "upper bound for the rho sweep");
    verify->add_option("--mmax", c.mmax, "largest q-exponent compared");
    verify->add_option("--radius", c.radius, "tree radius");
    verify->add_option("--count", c.count, "number of random samples");
    verify->add_option("--alpha-max", c.alpha_max, "largest alpha for local-compare");
    verify->add_option("--classes", c.classes, "number of optimal embedding classes");
    verify->add_option("--seed", c.seed, "seed for random sweeps");
    verify->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", c.out_path, "write to a file instead of stdout");

    auto* cycle = app.add_subcommand("cycle", "decompose a local special cycle");
    cycle->add_option("--p", c.p)->required();
    cycle->add_option("--delta", c.delta)->required();
    cycle->add_option("--sign", c.sign, "plus | minus");
    cycle->add_option("--b", c.b, "vector \"x0+y0*d,x1+y1*d\" with optional /p^e")->required();
    cycle->add_option("--radius", c.radius, "precision-policy radius (defaults to the cycle depth)");
    cycle->add_flag("--ortho", c.ortho, "orthogonal cycle with eigenvector b");
    cycle->add_option("--alpha", c.alpha, "alpha for --ortho");
    cycle->add_option("--out", c.out_path);

    auto* lift = app.add_subcommand("lift", "formal Shimura lift of a series file");
    lift->add_option("--kappa", c.kappa)->required();
    lift->add_option("--level", c.level)->required();
    lift->add_option("--t", c.t)->required();
    lift->add_option("--chi-disc", c.chi_disc, "Kronecker character discriminant (default principal mod 4N)");
    lift->add_option("--mmax", c.mmax, "requested output truncation");
    lift->add_option("--in", c.in_path)->required();
    lift->add_option("--out", c.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kHypothesis;
    }

    try {
        if (*verify) return cmd_verify(c, out);
        if (*cycle) return cmd_cycle(c, out);
        return cmd_lift(c, out);
    } catch (const PrecisionExhausted& e) {
        err << "precision exhausted: " << e.what() << "; set CYCLELIFT_PRECISION to at least " << e.needed() << '\n';
        return kPrecision;
    } catch (const TruncationInsufficient& e) {
        err << "truncation insufficient: " << e.what() << '\n';
        return kTruncation;
    } catch (const HypothesisViolation& e) {
        err << "hypothesis violation: " << e.what() << '\n';
        return kHypothesis;
    } catch (const DegenerateVector& e) {
        err << "degenerate vector: " << e.what() << '\n';
        return kHypothesis;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kHypothesis;
    }
}

}  // namespace cyclelift::cli
