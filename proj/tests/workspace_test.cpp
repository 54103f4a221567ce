#include "doctest.h"
#include "gmr/report.hpp"
#include "gmr/workspace.hpp"

using namespace gmr;

namespace {

const char* kMini = R"({
  "search_bound": 64,
  "rings": {
    "F2": {"kind": "cyclic", "n": 2},
    "P": {"kind": "product", "factors": ["F2", "F2"]},
    "T": {"kind": "context_ring", "context": "u2"}
  },
  "bimodules": {
    "reg": {"kind": "regular", "ring": "F2"},
    "z": {"kind": "zero", "left": "F2", "right": "F2"}
  },
  "contexts": {
    "u2": {"R": "F2", "S": "F2", "M": "reg", "N": "z", "bracket": "zero", "paren": "zero"},
    "m2": {"R": "F2", "S": "F2", "M": "reg", "N": "reg", "bracket": [[[1]]], "paren": [[[1]]]}
  },
  "pairs": {"u2_self": {"left": "u2", "right": "u2"}},
  "claims": [
    {"claim": "zero-maps-complete", "pair": "u2_self"},
    {"claim": "inner-obstruction", "context": "m2"}
  ]
})";

}  // namespace

TEST_CASE("workspace loads and validates") {
    auto res = parse_workspace(kMini);
    CHECK(res.all_ok);
    const auto& ws = res.workspace;
    CHECK(ws.search_bound == 64);
    CHECK(ws.ring("F2")->order() == 2);
    CHECK(ws.ring("P")->order() == 4);
    CHECK(ws.ring("T")->order() == 8);  // context ring of u2
    CHECK(ws.context("m2")->validated());
    CHECK(ws.context_ring("m2")->order() == 16);
    CHECK(ws.pair("u2_self").left == "u2");
    CHECK(ws.resolve_pair("m2").right == "m2");  // context name as self-pair
    CHECK(ws.claims.size() == 2);

    // every named object got a validation item and passed; the context_ring
    // kind reports the realized ring under its own name
    bool saw_realized_ring = false;
    for (const auto& item : res.items) {
        CHECK(item.ok());
        saw_realized_ring |= item.kind == "ring" && item.name == "T";
    }
    CHECK(saw_realized_ring);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_workspace("{\n  \"rings\": {\n    oops\n}}");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
}

TEST_CASE("dangling names are semantic errors naming the object") {
    const char* bad = R"({"bimodules": {"m": {"kind": "regular", "ring": "nope"}}})";
    try {
        parse_workspace(bad);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("nope") != std::string::npos);
    }

    const char* badpair = R"({"pairs": {"p": {"left": "a", "right": "b"}}})";
    CHECK_THROWS_AS(parse_workspace(badpair), ConfigError);

    const char* badclaim = R"({"claims": [{"claim": "no-such-claim"}]})";
    CHECK_THROWS_AS(parse_workspace(badclaim), ConfigError);
}

TEST_CASE("axiom failures are reported per object, not thrown") {
    // u2 context with bracket = mult but paren = zero is inconsistent
    const char* bad = R"({
      "rings": {"F2": {"kind": "cyclic", "n": 2}},
      "bimodules": {"reg": {"kind": "regular", "ring": "F2"}},
      "contexts": {
        "broken": {"R": "F2", "S": "F2", "M": "reg", "N": "reg",
                   "bracket": [[[1]]], "paren": "zero"}
      }
    })";
    auto res = parse_workspace(bad);
    CHECK_FALSE(res.all_ok);
    bool found = false;
    for (const auto& item : res.items)
        if (item.kind == "context" && item.name == "broken") {
            found = true;
            CHECK_FALSE(item.ok());
            CHECK_FALSE(item.report.ok());
        }
    CHECK(found);
}

TEST_CASE("dependents of invalid objects are skipped") {
    const char* bad = R"({
      "rings": {
        "F2": {"kind": "cyclic", "n": 2},
        "T": {"kind": "context_ring", "context": "broken"}
      },
      "bimodules": {"reg": {"kind": "regular", "ring": "F2"}},
      "contexts": {
        "broken": {"R": "F2", "S": "F2", "M": "reg", "N": "reg",
                   "bracket": [[[1]]], "paren": "zero"}
      }
    })";
    auto res = parse_workspace(bad);
    CHECK_FALSE(res.all_ok);
    bool skipped = false;
    for (const auto& item : res.items)
        if (item.name == "T") skipped = item.skipped;
    CHECK(skipped);
}

TEST_CASE("table hashing and elision") {
    std::vector<Elem> small{1, 2, 3};
    ReportOptions opts;
    auto j = json_table(small, opts);
    CHECK(j["size"] == 3);
    CHECK(j.contains("entries"));
    CHECK(j["hash"] == fnv1a64_hex("1,2,3"));

    std::vector<Elem> big(100, 7);
    auto jb = json_table(big, opts);
    CHECK_FALSE(jb.contains("entries"));
    CHECK(jb["hash"].get<std::string>().size() == 16);

    opts.full_tables = true;
    CHECK(json_table(big, opts).contains("entries"));
}

TEST_CASE("structured rendering is deterministic") {
    auto res1 = parse_workspace(kMini);
    auto res2 = parse_workspace(kMini);
    Json a = report_envelope("x", Json::object());
    Json b = report_envelope("x", Json::object());
    for (const auto& item : res1.items) a["items"].push_back(json_validation(item.report));
    for (const auto& item : res2.items) b["items"].push_back(json_validation(item.report));
    CHECK(render_structured(a) == render_structured(b));
}
