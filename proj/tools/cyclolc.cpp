#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclolc/cyclolc.hpp"

namespace {

using namespace cyclolc;

constexpr int kOk = 0;          // success; all requested methods agree
constexpr int kDisagree = 1;    // measured disagreement, a correctness alarm
constexpr int kBadParams = 2;   // invalid parameters or caps
constexpr int kHypothesis = 3;  // closed form undefined (Wieferich p)

u64 env_u64(const char* name, u64 fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0') throw std::invalid_argument(std::string("invalid ") + name);
    return v;
}

void emit_report(const LcReport& rep, const std::string& format) {
    if (format == "csv") {
        std::cout << csv_header() << '\n' << to_csv_row(rep) << '\n';
    } else {
        std::cout << to_json(rep).dump(2) << '\n';
    }
}

struct Options {
    u64 p = 0;
    unsigned n = 1;
    u64 e = 0;
    u64 b = 0;
    std::optional<u64> g;
    std::string method = "all";
    std::string format;
    std::string out_path;
    std::string dump_path;
    u64 p_max = 17;
    unsigned n_max = 0;
    u64 period_max = 0;
    bool all_b = false;
    bool no_roots = false;
    bool orbit_fold = false;
    unsigned threads = 0;
    u64 samples = 512;
    u64 limit = 5000;
    Caps caps;
};

int run_generate(const Options& o) {
    const auto params = CyclotomicParams::make(o.p, o.n, o.e, o.b, o.g, o.caps);
    const Cyclotomy cy(params);
    const auto seq = BinarySequence::generate(cy);
    const auto fmt = parse_sequence_format(o.format.empty() ? "bits" : o.format);
    const std::string payload = seq.serialize(fmt);

    std::ostringstream summary;
    summary << "N=" << seq.size() << " weight=" << seq.weight() << " p=" << params.p
            << " n=" << params.n << " e=" << params.e << " b=" << params.b << " g=" << params.g;
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open " + o.out_path);
        f << payload;
        std::cout << summary.str() << '\n';
    } else {
        std::cout << payload;
        std::cerr << summary.str() << '\n';
    }

    if (!o.dump_path.empty()) {
        nlohmann::ordered_json classes = nlohmann::ordered_json::object();
        for (unsigned j = 1; j <= params.n; ++j)
            for (u64 i = 0; i < params.d(j); ++i)
                classes[std::to_string(j) + "," + std::to_string(i)] = cy.cyclotomic_class(j, i);
        const auto sets = cy.characteristic_sets();
        nlohmann::ordered_json dump;
        dump["classes"] = classes;
        dump["c0"] = sets.c0;
        dump["c1"] = sets.c1;
        std::ofstream f(o.dump_path);
        if (!f) throw std::invalid_argument("cannot open " + o.dump_path);
        f << dump.dump(2) << '\n';
    }
    return kOk;
}

int run_predict(const Options& o) {
    const auto params = CyclotomicParams::make(o.p, o.n, o.e, o.b, o.g, o.caps);
    const Prediction pred = predict_lc(params);
    if (!pred.lc) {
        std::cerr << "theorem hypothesis violated: " << params.p << " is a Wieferich prime\n";
        return kHypothesis;
    }
    LcReport rep;
    rep.params = params;
    rep.predicted = pred.lc;
    rep.two_in_d0 = pred.two_in_d0;
    emit_report(rep, o.format);
    return kOk;
}

int run_measure(const Options& o) {
    const auto params = CyclotomicParams::make(o.p, o.n, o.e, o.b, o.g, o.caps);
    MeasureOptions opt;
    opt.bm = o.method == "bm" || o.method == "all";
    opt.gcd = o.method == "gcd" || o.method == "all";
    opt.roots = o.method == "roots" || o.method == "all";
    opt.orbit_fold = o.orbit_fold;
    opt.caps = o.caps;
    const LcReport rep = measure(params, opt);
    emit_report(rep, o.format);
    return rep.agree ? kOk : kDisagree;
}

int run_verify(const Options& o) {
    GridSpec spec;
    spec.p_max = o.p_max;
    spec.n_max = o.n_max;
    spec.period_max = o.period_max;
    spec.b_sweep = o.all_b ? BSweep::all : BSweep::standard;
    spec.with_roots = !o.no_roots;
    spec.orbit_fold = o.orbit_fold;
    spec.caps = o.caps;
    spec.threads = o.threads;
    const GridResult res = run_grid(spec);
    if (res.rows.empty()) {
        std::cout << "no parameters in range\n";
        return kOk;
    }
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["rows"] = to_json(res.rows);
        j["skipped_wieferich"] = res.skipped_wieferich;
        j["all_agree"] = res.all_agree();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << to_csv(res.rows);
        for (u64 w : res.skipped_wieferich) std::cerr << "skipped Wieferich prime " << w << '\n';
    }
    return res.all_agree() ? kOk : kDisagree;
}

int run_identities(const Options& o) {
    const auto params = CyclotomicParams::make(o.p, o.n, o.e, o.b, o.g, o.caps);
    const Cyclotomy cy(params);
    const FieldCtx ctx = FieldCtx::build(params.p, params.n, o.caps);
    const IdentityReport rep = verify_identities(cy, ctx, o.samples);
    for (const auto& fam : rep.families)
        std::cout << fam.name << ": checked=" << fam.checked << " failed=" << fam.failed << '\n';
    return rep.all_pass() ? kOk : kDisagree;
}

int run_wieferich(const Options& o) {
    if (o.limit < 3) throw std::invalid_argument("limit must be at least 3");
    for (u64 q = 3; q <= o.limit; q += 2)
        if (is_prime(q) && is_wieferich(q)) std::cout << q << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    try {
        o.caps.period = env_u64("CYCLO_CAP_PERIOD", o.caps.period);
        o.caps.degree = static_cast<unsigned>(env_u64("CYCLO_CAP_DEGREE", o.caps.degree));
    } catch (const std::exception& ex) {
        std::cerr << ex.what() << '\n';
        return kBadParams;
    }

    CLI::App app{"generalized cyclotomic binary sequences of period p^n: generation, "
                 "linear complexity measurement, and closed-form verification"};
    app.require_subcommand(1);

    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--cap-period", o.caps.period, "largest admissible period p^n");
        sub->add_option("--cap-degree", o.caps.degree, "largest admissible field degree");
    };
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "odd prime")->required();
        sub->add_option("--n", o.n, "exponent of p (default 1)");
        sub->add_option("--e", o.e, "even divisor count e with p = ef + 1, f = 2^r")->required();
        sub->add_option("--b", o.b, "characteristic-set shift in [0, d_n)");
        sub->add_option("--g", o.g, "primitive root modulo p^2 (default: smallest)");
        add_caps(sub);
    };

    auto* cmd_gen = app.add_subcommand("generate", "write one period of the sequence");
    add_params(cmd_gen);
    cmd_gen->add_option("--format", o.format, "bits|hex|csv (default bits)")
        ->check(CLI::IsMember({"bits", "hex", "csv"}));
    cmd_gen->add_option("--out", o.out_path, "output file (default: stdout)");
    cmd_gen->add_option("--dump-classes", o.dump_path,
                        "write cyclotomic classes and characteristic sets as JSON");

    auto* cmd_pred = app.add_subcommand("predict", "closed-form linear complexity");
    add_params(cmd_pred);
    cmd_pred->add_option("--format", o.format, "json|csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* cmd_meas = app.add_subcommand("measure", "measure linear complexity");
    add_params(cmd_meas);
    cmd_meas->add_option("--method", o.method, "bm|gcd|roots|all (default all)")
        ->check(CLI::IsMember({"bm", "gcd", "roots", "all"}));
    cmd_meas->add_option("--format", o.format, "json|csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_meas->add_flag("--orbit-fold", o.orbit_fold, "fold Frobenius orbits in the root count");

    auto* cmd_ver = app.add_subcommand("verify", "sweep the parameter grid, compare every method");
    cmd_ver->add_option("--p-max", o.p_max, "largest prime to include")->required();
    cmd_ver->add_option("--n-max", o.n_max, "largest exponent (0: period cap only)");
    cmd_ver->add_option("--period-max", o.period_max, "largest period (0: period cap)");
    cmd_ver->add_flag("--all-b", o.all_b, "sweep every b instead of {0, 1, d_n/2}");
    cmd_ver->add_flag("--no-roots", o.no_roots, "skip the root-counting method");
    cmd_ver->add_flag("--orbit-fold", o.orbit_fold, "fold Frobenius orbits in the root count");
    cmd_ver->add_option("--threads", o.threads, "worker threads (0: all cores)");
    cmd_ver->add_option("--format", o.format, "csv|json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    add_caps(cmd_ver);

    auto* cmd_id = app.add_subcommand("identities", "check the structural identities");
    add_params(cmd_id);
    cmd_id->add_option("--samples", o.samples, "sample budget per family for large periods");

    auto* cmd_wief = app.add_subcommand("wieferich", "list Wieferich primes up to a bound");
    cmd_wief->add_option("--limit", o.limit, "inclusive upper bound, at least 3 (default 5000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex);
        return code == 0 ? kOk : kBadParams;
    }

    try {
        if (o.caps.period < 3 || o.caps.period > kPeriodCapCeiling)
            throw std::invalid_argument("period cap must lie in [3, 2^24]");
        if (o.caps.degree < 1 || o.caps.degree > kDegreeCapCeiling)
            throw std::invalid_argument("field degree cap must lie in [1, 128]");
        if (app.got_subcommand(cmd_gen)) return run_generate(o);
        if (app.got_subcommand(cmd_pred)) return run_predict(o);
        if (app.got_subcommand(cmd_meas)) return run_measure(o);
        if (app.got_subcommand(cmd_ver)) return run_verify(o);
        if (app.got_subcommand(cmd_id)) return run_identities(o);
        if (app.got_subcommand(cmd_wief)) return run_wieferich(o);
    } catch (const SizeError& ex) {
        std::cerr << ex.what() << '\n';
        return kBadParams;
    } catch (const std::invalid_argument& ex) {
        std::cerr << ex.what() << '\n';
        return kBadParams;
    }
    return kBadParams;
}
