#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fourfold/claims.hpp"

namespace fourfold {

struct RunConfig {
    std::optional<Quartic> poly;
    std::optional<unsigned> search_bound;
    std::vector<std::string> claims;  // empty means the full catalogue
    int precision_bits = 128;
    int samples = 25;
    uint64_t seed = 0;
    std::string format = "json";  // json | md
    std::string out_path;         // empty writes to stdout
    long c_max = 20;
    long k1_max = 10;
    Rat omega4 = Rat(24);

    RunOptions options() const {
        RunOptions o;
        o.precision_bits = precision_bits;
        o.samples = samples;
        o.seed = seed;
        o.c_max = c_max;
        o.k1_max = k1_max;
        o.omega4 = omega4;
        return o;
    }
};

struct SuiteReport {
    RunConfig config;
    bool gate_present = false;
    GateReport gate;
    std::vector<ClaimReport> claims;
    std::string overall;  // verified | failed | gate-rejected
    double total_elapsed_ms = 0;
};

// --- serialization ---------------------------------------------------------

inline Json config_json(const RunConfig& c) {
    Json j;
    if (c.poly) {
        j["poly"] = Json::array(
            {to_string(c.poly->a), to_string(c.poly->b), to_string(c.poly->c),
             to_string(c.poly->d)});
    } else {
        j["poly"] = nullptr;
    }
    j["search"] = c.search_bound ? Json(*c.search_bound) : Json(nullptr);
    j["claims"] = c.claims;
    j["precision_bits"] = c.precision_bits;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["format"] = c.format;
    j["out"] = c.out_path;
    j["c_max"] = c.c_max;
    j["k1_max"] = c.k1_max;
    j["omega4"] = to_string(c.omega4);
    return j;
}

inline RunConfig config_from_json(const Json& j) {
    RunConfig c;
    if (!j.at("poly").is_null()) {
        const auto& p = j.at("poly");
        c.poly = Quartic{rat_from_string(p.at(0)), rat_from_string(p.at(1)),
                         rat_from_string(p.at(2)), rat_from_string(p.at(3))};
    }
    if (!j.at("search").is_null()) c.search_bound = j.at("search").get<unsigned>();
    c.claims = j.at("claims").get<std::vector<std::string>>();
    c.precision_bits = j.at("precision_bits").get<int>();
    c.samples = j.at("samples").get<int>();
    c.seed = j.at("seed").get<uint64_t>();
    c.format = j.at("format").get<std::string>();
    c.out_path = j.at("out").get<std::string>();
    c.c_max = j.at("c_max").get<long>();
    c.k1_max = j.at("k1_max").get<long>();
    c.omega4 = rat_from_string(j.at("omega4").get<std::string>());
    return c;
}

inline Json gate_json(const GateReport& g) {
    return {{"irreducible", g.irreducible},
            {"four_real_roots", g.four_real_roots},
            {"galois_s4", g.galois_s4},
            {"delta_integral", g.delta_integral},
            {"real_root_count", g.real_root_count},
            {"discriminant", to_string(g.discriminant)},
            {"delta", to_string(g.delta)},
            {"rescale_n", to_string(g.rescale_n)}};
}

inline GateReport gate_from_json(const Json& j) {
    GateReport g;
    g.irreducible = j.at("irreducible").get<bool>();
    g.four_real_roots = j.at("four_real_roots").get<bool>();
    g.galois_s4 = j.at("galois_s4").get<bool>();
    g.delta_integral = j.at("delta_integral").get<bool>();
    g.real_root_count = j.at("real_root_count").get<int>();
    g.discriminant = rat_from_string(j.at("discriminant").get<std::string>());
    g.delta = rat_from_string(j.at("delta").get<std::string>());
    g.rescale_n = Int(j.at("rescale_n").get<std::string>());
    return g;
}

inline ClaimStatus status_from_string(const std::string& s) {
    if (s == "verified-exact") return ClaimStatus::kVerifiedExact;
    if (s == "verified-numeric") return ClaimStatus::kVerifiedNumeric;
    if (s == "failed") return ClaimStatus::kFailed;
    if (s == "skipped") return ClaimStatus::kSkipped;
    throw IoError("unknown claim status: " + s);
}

inline Json to_json(const SuiteReport& r) {
    Json j;
    j["config"] = config_json(r.config);
    j["gate"] = r.gate_present ? gate_json(r.gate) : Json(nullptr);
    Json claims = Json::array();
    for (const ClaimReport& c : r.claims)
        claims.push_back({{"id", c.id},
                          {"title", c.title},
                          {"anchor", c.anchor},
                          {"status", to_string(c.status)},
                          {"witness", c.witness},
                          {"elapsed_ms", c.elapsed_ms}});
    j["claims"] = claims;
    j["overall"] = r.overall;
    j["total_elapsed_ms"] = r.total_elapsed_ms;
    return j;
}

inline SuiteReport suite_from_json(const Json& j) {
    SuiteReport r;
    r.config = config_from_json(j.at("config"));
    if (!j.at("gate").is_null()) {
        r.gate_present = true;
        r.gate = gate_from_json(j.at("gate"));
    }
    for (const Json& c : j.at("claims")) {
        ClaimReport cr;
        cr.id = c.at("id").get<std::string>();
        cr.title = c.at("title").get<std::string>();
        cr.anchor = c.at("anchor").get<std::string>();
        cr.status = status_from_string(c.at("status").get<std::string>());
        cr.witness = c.at("witness");
        cr.elapsed_ms = c.at("elapsed_ms").get<double>();
        r.claims.push_back(std::move(cr));
    }
    r.overall = j.at("overall").get<std::string>();
    r.total_elapsed_ms = j.at("total_elapsed_ms").get<double>();
    return r;
}

inline std::string to_markdown(const SuiteReport& r) {
    std::ostringstream os;
    os << "# Verification report\n\n";
    if (r.config.poly) {
        os << "Quartic: `" << to_string(r.config.poly->a) << " x^4 + ("
           << to_string(r.config.poly->b) << ") x^2 + (" << to_string(r.config.poly->c)
           << ") x + (" << to_string(r.config.poly->d) << ")`\n\n";
    }
    if (r.gate_present) {
        os << "## Gate\n\n"
           << "| check | result |\n|---|---|\n"
           << "| irreducible | " << (r.gate.irreducible ? "yes" : "no") << " |\n"
           << "| four real roots | " << (r.gate.four_real_roots ? "yes" : "no") << " |\n"
           << "| full symmetric Galois group | " << (r.gate.galois_s4 ? "yes" : "no") << " |\n"
           << "| squared Vandermonde integral | " << (r.gate.delta_integral ? "yes" : "no")
           << " |\n"
           << "| delta | " << to_string(r.gate.delta) << " |\n\n";
    }
    os << "## Claims\n\n| id | title | status | ms |\n|---|---|---|---|\n";
    for (const ClaimReport& c : r.claims)
        os << "| " << c.id << " | " << c.title << " | " << to_string(c.status) << " | "
           << static_cast<long>(c.elapsed_ms) << " |\n";
    os << "\nOverall: **" << r.overall << "**\n";
    return os.str();
}

// Exit codes: 0 verified, 1 claim failure, 2 gate rejection, 3 usage, 4 io.
inline int emit_report(const SuiteReport& r, const RunConfig& cfg) {
    const std::string body =
        cfg.format == "md" ? to_markdown(r) : to_json(r).dump(2) + "\n";
    if (cfg.out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) throw IoError("cannot open output path " + cfg.out_path);
        out << body;
        if (!out.good()) throw IoError("write failed for " + cfg.out_path);
    }
    if (r.overall == "gate-rejected") return 2;
    return r.overall == "verified" ? 0 : 1;
}

inline SuiteReport run_suite(const RunConfig& cfg) {
    claims_detail::Timer timer;
    SuiteReport report;
    report.config = cfg;

    Quartic q = cfg.poly ? *cfg.poly : search_quartic(*cfg.search_bound);
    report.config.poly = q;
    report.gate = gate_quartic(q);
    report.gate_present = true;
    if (!(report.gate.irreducible && report.gate.four_real_roots && report.gate.galois_s4)) {
        report.overall = "gate-rejected";
        report.total_elapsed_ms = timer.ms();
        return report;
    }
    const Context ctx(q);
    report.claims = run_all(ctx, cfg.options(), cfg.claims);
    bool all = true;
    for (const ClaimReport& c : report.claims) all = all && c.verified();
    report.overall = all ? "verified" : "failed";
    report.total_elapsed_ms = timer.ms();
    return report;
}

}  // namespace fourfold
