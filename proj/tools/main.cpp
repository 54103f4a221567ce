#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "gmr/iso_search.hpp"
#include "gmr/report.hpp"
#include "gmr/sixtuple.hpp"
#include "gmr/theorems.hpp"
#include "gmr/version.hpp"
#include "gmr/workspace.hpp"

namespace {

using namespace gmr;

constexpr int kExitOk = 0;
constexpr int kExitClaimFalse = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBound = 3;

struct Options {
    std::string config;
    std::uint32_t bound = 0;  // 0: use the workspace value
    bool full = false;
    std::string format = "text";
};

IsoSearchOptions search_options(const Options& opt, const Workspace& ws) {
    IsoSearchOptions s;
    s.bound = opt.bound ? opt.bound : ws.search_bound;
    return s;
}

ReportOptions report_options(const Options& opt) {
    ReportOptions r;
    r.full_tables = opt.full;
    return r;
}

void print_report(const Json& report, const Options& opt,
                  std::chrono::steady_clock::time_point start) {
    if (opt.format == "structured") {
        std::cout << render_structured(report);
    } else {
        std::cout << render_text(report);
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << "# elapsed: " << us / 1000.0 << " ms\n";
    }
}

Json json_ring(const FinRing& r, const ReportOptions& opts) {
    Json j;
    j["orders"] = r.carrier().cyclic_orders();
    j["one"] = json_coords(r.carrier(), r.one());
    j["mult"] = json_table(r.mul_table(), opts);
    return j;
}

Json json_map(const RingMap& m, const ReportOptions& opts) {
    Json j;
    j["table"] = json_table(m.table(), opts);
    const auto& g = m.grade_profile();
    j["graded"] = g.graded;
    j["antigraded"] = g.antigraded;
    j["semigraded"] = g.semigraded;
    j["antisemigraded"] = g.antisemigraded;
    return j;
}

Json json_tuple(const SixTuple& t, const ReportOptions& opts) {
    const bool c0 = t.kind() == TupleKind::class0;
    const auto& cp = *t.target()->context();
    Json j;
    j["kind"] = c0 ? "class0" : "class1";
    j[c0 ? "gamma" : "rho"] = json_table(t.gamma().table(), opts);
    j[c0 ? "delta" : "sigma"] = json_table(t.delta().table(), opts);
    j[c0 ? "u" : "mu"] = json_table(t.u().table(), opts);
    j[c0 ? "v" : "nu"] = json_table(t.v().table(), opts);
    j[c0 ? "m0" : "mstar"] = json_coords(cp.M()->carrier(), t.m0());
    j[c0 ? "n0" : "nstar"] = json_coords(cp.N()->carrier(), t.n0());
    return j;
}

int cmd_validate(const Options& opt) {
    LoadResult res = load_workspace_file(opt.config);
    Json args;
    args["config"] = opt.config;
    Json report = report_envelope("validate", args);
    Json items = Json::array();
    for (const auto& item : res.items) {
        Json j;
        j["kind"] = item.kind;
        j["name"] = item.name;
        if (item.skipped) {
            j["skipped"] = true;
            j["reason"] = item.reason;
        } else {
            j["validation"] = json_validation(item.report);
        }
        items.push_back(std::move(j));
    }
    report["objects"] = std::move(items);
    report["ok"] = res.all_ok;
    auto start = std::chrono::steady_clock::now();
    print_report(report, opt, start);
    return res.all_ok ? kExitOk : kExitConfig;
}

int cmd_enumerate(const Options& opt, const std::string& pair_name, const std::string& which) {
    auto start = std::chrono::steady_clock::now();
    Workspace ws = load_workspace_strict(opt.config);
    auto opts = search_options(opt, ws);
    auto ropts = report_options(opt);
    auto pr = ws.resolve_pair(pair_name);
    auto L = ws.context_ring(pr.left);
    auto R = ws.context_ring(pr.right);

    Json args;
    args["config"] = opt.config;
    args["pair"] = pair_name;
    args["which"] = which;
    args["bound"] = opts.bound;
    Json report = report_envelope("enumerate", args);

    if (which == "iso" || which == "graded" || which == "semigraded") {
        std::vector<RingMap> maps;
        for (const auto& iso : ring_isos_bruteforce(L->ring(), R->ring(), opts))
            maps.push_back(RingMap::from_ring_iso(L, R, iso));
        if (which == "iso") {
            Json arr = Json::array();
            for (const auto& m : maps) arr.push_back(json_map(m, ropts));
            report["count"] = maps.size();
            report["isomorphisms"] = std::move(arr);
        } else {
            bool anti_first = which == "semigraded";
            Json plus = Json::array(), minus = Json::array();
            for (const auto& m : maps) {
                const auto& g = m.grade_profile();
                if (anti_first ? g.semigraded : g.graded) plus.push_back(json_map(m, ropts));
                if (anti_first ? g.antisemigraded : g.antigraded)
                    minus.push_back(json_map(m, ropts));
            }
            report[anti_first ? "semigraded" : "graded"] = std::move(plus);
            report[anti_first ? "antisemigraded" : "antigraded"] = std::move(minus);
        }
    } else if (which == "iso0") {
        auto iso0 = enumerate_iso0(L, R, opts);
        Json c0 = Json::array(), c1 = Json::array();
        for (const auto& t : iso0.class0) c0.push_back(json_tuple(t, ropts));
        for (const auto& t : iso0.class1) c1.push_back(json_tuple(t, ropts));
        report["class0_count"] = iso0.class0.size();
        report["class1_count"] = iso0.class1.size();
        report["class0"] = std::move(c0);
        report["class1"] = std::move(c1);
    } else if (which == "idempotents") {
        Json arr = Json::array();
        for (Elem e : idempotents(*L->ring())) {
            Json j;
            j["coords"] = json_coords(L->ring()->carrier(), e);
            switch (classify_idempotent(*L, e)) {
                case IdempotentClass::zero: j["class"] = "zero"; break;
                case IdempotentClass::one: j["class"] = "one"; break;
                case IdempotentClass::type1: j["class"] = "type1"; break;
                case IdempotentClass::type2: j["class"] = "type2"; break;
                default: j["class"] = "other"; break;
            }
            arr.push_back(std::move(j));
        }
        report["count"] = arr.size();
        report["idempotents"] = std::move(arr);
    } else if (which == "central-idempotents") {
        auto scan = central_idempotents(*L->ring());
        Json arr = Json::array();
        for (Elem e : scan) arr.push_back(json_coords(L->ring()->carrier(), e));
        report["count"] = scan.size();
        report["central_idempotents"] = std::move(arr);
        report["matches_diagonal_characterization"] =
            scan == central_idempotents_via_lemma(*L);
    } else {
        throw ConfigError("unknown enumeration '" + which +
                          "' (expected iso, iso0, graded, semigraded, idempotents, "
                          "central-idempotents)");
    }
    print_report(report, opt, start);
    return kExitOk;
}

Verdict run_claim(const Workspace& ws, const Workspace::ClaimBinding& b,
                  const IsoSearchOptions& opts) {
    Verdict v;
    if (b.claim == claims::strict_graded || b.claim == claims::semigraded_classification ||
        b.claim == claims::zero_maps_complete) {
        auto pr = ws.resolve_pair(b.args.at("pair"));
        auto L = ws.context_ring(pr.left);
        auto R = ws.context_ring(pr.right);
        if (b.claim == claims::strict_graded) v = verify_strict_implies_graded(L, R, opts);
        else if (b.claim == claims::semigraded_classification)
            v = verify_semigraded_theorem(L, R, opts);
        else v = verify_zero_maps_theorem(L, R, opts);
        v.subject = b.args.at("pair");
    } else if (b.claim == claims::regular_module_indecomposable) {
        v = verify_example_3_4(ws.ring(b.args.at("ring")), opts);
        v.subject = b.args.at("ring");
    } else if (b.claim == claims::decomposable_swap) {
        v = verify_decomposable_remark(ws.context_ring(b.args.at("context")),
                                       ws.ring(b.args.at("factor")), opts);
        v.subject = b.args.at("context") + " over " + b.args.at("factor");
    } else {
        auto T = ws.context_ring(b.args.at("context"));
        if (b.claim == claims::central_idempotents) v = verify_central_idempotent_lemma(T);
        else if (b.claim == claims::indecomposable_context) v = verify_indecomposability(T);
        else if (b.claim == claims::inner_obstruction)
            v = verify_nonzero_maps_obstruction(T, opts);
        else if (b.claim == claims::group_structure) v = verify_group_structure(T, opts);
        else throw ConfigError("unknown claim '" + b.claim + "'");
        v.subject = b.args.at("context");
    }
    return v;
}

int cmd_verify(const Options& opt, const std::string& claim) {
    auto start = std::chrono::steady_clock::now();
    Workspace ws = load_workspace_strict(opt.config);
    auto opts = search_options(opt, ws);

    Json args;
    args["config"] = opt.config;
    args["claim"] = claim;
    args["bound"] = opts.bound;
    Json report = report_envelope("verify", args);

    std::size_t holds = 0, refuted = 0, na = 0, matched = 0;
    Json items = Json::array();
    for (const auto& b : ws.claims) {
        if (claim != "all" && claim != b.claim) continue;
        ++matched;
        Verdict v = run_claim(ws, b, opts);
        switch (v.status) {
            case VerdictStatus::holds: ++holds; break;
            case VerdictStatus::refuted: ++refuted; break;
            default: ++na; break;
        }
        items.push_back(json_verdict(v));
    }
    if (matched == 0)
        throw ConfigError("no claim instances match '" + claim + "' in this workspace");
    report["verdicts"] = std::move(items);
    Json summary;
    summary["holds"] = holds;
    summary["refuted"] = refuted;
    summary["not_applicable"] = na;
    report["summary"] = std::move(summary);
    print_report(report, opt, start);
    return refuted == 0 ? kExitOk : kExitClaimFalse;
}

int cmd_peirce(const Options& opt, const std::string& ring_name, const std::string& elem_spec) {
    auto start = std::chrono::steady_clock::now();
    Workspace ws = load_workspace_strict(opt.config);
    auto ropts = report_options(opt);
    auto A = ws.ring(ring_name);

    std::vector<std::int64_t> coords;
    std::string cur;
    for (char ch : elem_spec + ",") {
        if (ch == ',') {
            if (cur.empty()) throw ConfigError("bad element spec '" + elem_spec + "'");
            coords.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (coords.size() != A->carrier().rank())
        throw ConfigError("element needs " + std::to_string(A->carrier().rank()) +
                          " coordinates");
    Elem e = A->carrier().from_coords(coords);

    auto dec = peirce_decompose(A, e);

    Json args;
    args["config"] = opt.config;
    args["ring"] = ring_name;
    args["idempotent"] = json_coords(A->carrier(), e);
    Json report = report_envelope("peirce", args);

    const auto& c = *dec.context;
    Json ctx;
    ctx["R"] = json_ring(*c.R(), ropts);
    ctx["S"] = json_ring(*c.S(), ropts);
    Json mj;
    mj["orders"] = c.M()->carrier().cyclic_orders();
    ctx["M"] = std::move(mj);
    Json nj;
    nj["orders"] = c.N()->carrier().cyclic_orders();
    ctx["N"] = std::move(nj);
    ctx["bracket"] = json_table(c.bracket_table(), ropts);
    ctx["paren"] = json_table(c.paren_table(), ropts);
    ctx["strict"] = is_strict(c);
    report["context"] = std::move(ctx);
    report["witness"] = json_table(dec.witness.table(), ropts);
    report["context_validation"] = json_validation(validate_context(c));
    print_report(report, opt, start);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Morita context rings: build, classify, verify"};
    app.set_version_flag("--version", std::string("gmr ") + gmr::kVersion);
    app.fallthrough();

    Options opt;
    app.add_option("--config", opt.config, "workspace config file")->required();
    app.add_option("--bound", opt.bound, "override the isomorphism search bound");
    app.add_flag("--full", opt.full, "include full function tables in reports");
    app.add_option("--format", opt.format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));

    auto* validate = app.add_subcommand("validate", "validate every named object");
    std::string pair_name, which, claim = "all", ring_name, elem_spec;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate isomorphisms or idempotents");
    enumerate->add_option("pair", pair_name, "pair or context name")->required();
    enumerate
        ->add_option("which", which,
                     "iso | iso0 | graded | semigraded | idempotents | central-idempotents")
        ->required();
    auto* verify = app.add_subcommand("verify", "run claim verifications");
    verify->add_option("claim", claim, "claim id or 'all'");
    auto* peirce = app.add_subcommand("peirce", "Peirce decomposition along an idempotent");
    peirce->add_option("ring", ring_name, "ring name")->required();
    peirce->add_option("idempotent", elem_spec, "comma-separated coordinates")->required();
    app.require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (enumerate->parsed()) return cmd_enumerate(opt, pair_name, which);
        if (verify->parsed()) return cmd_verify(opt, claim);
        if (peirce->parsed()) return cmd_peirce(opt, ring_name, elem_spec);
    } catch (const gmr::SearchBoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBound;
    } catch (const gmr::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const gmr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitOk;
}
