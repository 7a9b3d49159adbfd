#pragma once

#include "CLI11.hpp"

#include "fourfold/report.hpp"

namespace fourfold {

namespace cli_detail {

inline std::vector<Rat> parse_rat_list(const std::string& csv, size_t expected) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rat_from_string(item));
    if (out.size() != expected)
        throw UsageError("--poly expects exactly four comma-separated rationals");
    return out;
}

}  // namespace cli_detail

// Flag and config-file parsing; flags override file values. Throws
// UsageError with a diagnostic naming the offending flag.
inline RunConfig parse_config(const std::vector<std::string>& args) {
    CLI::App app{"exact verification suite for the quartic four-fold constructions"};
    std::string poly_csv, claims_csv = "all", format = "json", out_path, omega4_str = "24";
    unsigned search_bound = 0;
    bool have_search = false;
    RunConfig cfg;

    auto* poly_opt = app.add_option("--poly", poly_csv,
                                    "coefficients a,b,c,d of a x^4 + b x^2 + c x + d "
                                    "(depress a general quartic first)");
    auto* search_opt =
        app.add_option("--search", search_bound, "search bound for an admissible quartic")
            ->check(CLI::NonNegativeNumber);
    app.add_option("--claims", claims_csv, "comma-separated claim ids, or 'all'");
    app.add_option("--precision-bits", cfg.precision_bits, "interval precision for sign checks")
        ->check(CLI::Range(32, 1 << 20));
    app.add_option("--samples", cfg.samples, "sample count for the numeric fallback");
    app.add_option("--seed", cfg.seed, "seed for the property-test style samples");
    app.add_option("--format", format, "report format: json or md");
    app.add_option("--out", out_path, "write the report to this path");
    app.add_option("--c-max", cfg.c_max, "bound for the twist multiplier search");
    app.add_option("--k1-max", cfg.k1_max, "bound for the curve-cutting power search");
    app.add_option("--omega4", omega4_str, "override for the top self-intersection number");
    app.set_config("--config", "", "flat key=value file mirroring the flags");

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "fourfold-verify");
    argv.reserve(storage.size());
    for (std::string& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help() << std::flush;
        throw;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    have_search = search_opt->count() > 0;

    if ((poly_opt->count() > 0) == have_search)
        throw UsageError("exactly one of --poly and --search is required");
    if (poly_opt->count() > 0) {
        const auto v = cli_detail::parse_rat_list(poly_csv, 4);
        if (v[0] == 0) throw UsageError("--poly: leading coefficient must be nonzero");
        cfg.poly = Quartic{v[0], v[1], v[2], v[3]};
    } else {
        cfg.search_bound = search_bound;
    }
    if (claims_csv != "all") {
        std::stringstream ss(claims_csv);
        std::string id;
        while (std::getline(ss, id, ',')) {
            bool known = false;
            for (const ClaimEntry& e : claim_catalogue()) known = known || id == e.id;
            if (!known) throw UsageError("--claims: unknown claim id " + id);
            cfg.claims.push_back(id);
        }
        if (cfg.claims.empty()) throw UsageError("--claims: empty selection");
    }
    if (format != "json" && format != "md")
        throw UsageError("--format must be json or md");
    cfg.format = format;
    cfg.out_path = out_path;
    cfg.omega4 = rat_from_string(omega4_str);
    if (cfg.omega4 <= 0) throw UsageError("--omega4 must be positive");
    if (cfg.c_max < 1 || cfg.k1_max < 1)
        throw UsageError("--c-max and --k1-max must be at least 1");
    return cfg;
}

inline RunConfig parse_config(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return parse_config(args);
}

inline int cli_main(int argc, char** argv) {
    try {
        const RunConfig cfg = parse_config(argc, argv);
        const SuiteReport report = run_suite(cfg);
        return emit_report(report, cfg);
    } catch (const CLI::CallForHelp&) {
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const DegenerateQuartic& e) {
        std::cerr << "gate: " << e.what() << "\n";
        return 2;
    } catch (const NotFound& e) {
        std::cerr << "search: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace fourfold
