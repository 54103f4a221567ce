#include "gmr/workspace.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "gmr/theorems.hpp"

namespace gmr {

namespace {

using Json = nlohmann::json;

[[noreturn]] void fail(const std::string& msg, const std::string& object = {}) {
    throw ConfigError(object.empty() ? msg : msg + " (object '" + object + "')", object);
}

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Elem parse_elem(const AbGroup& g, const Json& j, const std::string& object) {
    if (!j.is_array()) fail("element must be a coordinate array", object);
    std::vector<std::int64_t> c;
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail("element coordinates must be integers", object);
        c.push_back(v.get<std::int64_t>());
    }
    if (c.size() != g.rank()) fail("element has wrong coordinate count", object);
    return g.from_coords(c);
}

std::vector<std::uint32_t> parse_orders(const Json& j, const std::string& object) {
    if (!j.is_array()) fail("orders must be an array", object);
    std::vector<std::uint32_t> out;
    for (const auto& v : j) {
        if (!v.is_number_unsigned() && !v.is_number_integer())
            fail("orders must be integers", object);
        auto n = v.get<std::int64_t>();
        if (n < 2) fail("cyclic orders must be >= 2", object);
        out.push_back(static_cast<std::uint32_t>(n));
    }
    return out;
}

// rows x cols table of elements of `target`.
std::vector<Elem> parse_elem_matrix(const AbGroup& target, const Json& j, std::size_t rows,
                                    std::size_t cols, const std::string& object) {
    if (!j.is_array() || j.size() != rows) fail("table has wrong row count", object);
    std::vector<Elem> out;
    out.reserve(rows * cols);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols) fail("table has wrong column count", object);
        for (const auto& cell : row) out.push_back(parse_elem(target, cell, object));
    }
    return out;
}

struct Loader {
    const Json& root;
    LoadResult result;
    std::set<std::string> visiting;
    std::set<std::string> invalid_rings, invalid_bimodules, invalid_contexts;

    explicit Loader(const Json& r) : root(r) {}

    const Json* find_def(const char* section, const std::string& name) {
        auto sec = root.find(section);
        if (sec == root.end()) return nullptr;
        auto it = sec->find(name);
        if (it == sec->end()) return nullptr;
        return &*it;
    }

    void record(const std::string& kind, const std::string& name, ValidationReport rep) {
        bool ok = rep.ok();
        result.items.push_back(LoadItem{kind, name, false, "", std::move(rep)});
        if (!ok) result.all_ok = false;
    }

    void record_skipped(const std::string& kind, const std::string& name,
                        const std::string& reason) {
        result.items.push_back(LoadItem{kind, name, true, reason, ValidationReport{}});
        result.all_ok = false;
    }

    FinRing::Ptr ring(const std::string& name) {
        auto hit = result.workspace.rings.find(name);
        if (hit != result.workspace.rings.end()) return hit->second;
        if (invalid_rings.count(name)) return nullptr;
        const Json* def = find_def("rings", name);
        if (!def) fail("unknown ring", name);
        if (!visiting.insert("ring:" + name).second) fail("cyclic definition", name);

        FinRing::Ptr r;
        std::string skip_reason;
        try {
            std::string kind = def->value("kind", "");
            if (kind == "cyclic") {
                if (!def->contains("n")) fail("cyclic ring needs \"n\"", name);
                r = FinRing::cyclic(def->at("n").get<std::uint32_t>());
            } else if (kind == "product") {
                if (!def->contains("factors") || !def->at("factors").is_array() ||
                    def->at("factors").size() < 2)
                    fail("product ring needs at least two factors", name);
                FinRing::Ptr acc;
                for (const auto& f : def->at("factors")) {
                    auto factor = ring(f.get<std::string>());
                    if (!factor) {
                        skip_reason = "factor '" + f.get<std::string>() + "' is invalid";
                        break;
                    }
                    acc = acc ? FinRing::direct_product(acc, factor) : factor;
                }
                r = acc;
            } else if (kind == "table") {
                AbGroup g(parse_orders(def->at("orders"), name));
                auto bp = parse_elem_matrix(g, def->at("basis_products"), g.rank(), g.rank(), name);
                Elem one = parse_elem(g, def->at("one"), name);
                r = FinRing::from_basis_products(std::move(g), bp, one);
            } else if (kind == "context_ring") {
                auto T = context_ring(def->value("context", ""));
                if (T) r = T->ring();
                else skip_reason = "underlying context is invalid";
            } else {
                fail("unknown ring kind '" + kind + "'", name);
            }
        } catch (const ValidationError& e) {
            visiting.erase("ring:" + name);
            invalid_rings.insert(name);
            record("ring", name, e.report);
            return nullptr;
        } catch (const Json::exception& e) {
            fail(std::string("malformed ring definition: ") + e.what(), name);
        }
        visiting.erase("ring:" + name);
        if (!r) {
            invalid_rings.insert(name);
            record_skipped("ring", name, skip_reason);
            return nullptr;
        }
        record("ring", name, validate_ring(*r));
        result.workspace.rings.emplace(name, r);
        return r;
    }

    Bimodule::Ptr bimodule(const std::string& name) {
        auto hit = result.workspace.bimodules.find(name);
        if (hit != result.workspace.bimodules.end()) return hit->second;
        if (invalid_bimodules.count(name)) return nullptr;
        const Json* def = find_def("bimodules", name);
        if (!def) fail("unknown bimodule", name);
        if (!visiting.insert("bimodule:" + name).second) fail("cyclic definition", name);

        Bimodule::Ptr m;
        std::string skip_reason;
        try {
            std::string kind = def->value("kind", "");
            if (kind == "zero") {
                auto left = ring(def->value("left", ""));
                auto right = ring(def->value("right", ""));
                if (!left || !right) skip_reason = "a ring dependency is invalid";
                else m = Bimodule::zero(left, right);
            } else if (kind == "regular") {
                auto r = ring(def->value("ring", ""));
                if (!r) skip_reason = "a ring dependency is invalid";
                else m = Bimodule::regular(r);
            } else if (kind == "table") {
                auto left = ring(def->value("left", ""));
                auto right = ring(def->value("right", ""));
                if (!left || !right) {
                    skip_reason = "a ring dependency is invalid";
                } else {
                    AbGroup g(parse_orders(def->at("orders"), name));
                    auto la = parse_elem_matrix(g, def->at("left_basis_action"),
                                                left->carrier().rank(), g.rank(), name);
                    auto ra = parse_elem_matrix(g, def->at("right_basis_action"), g.rank(),
                                                right->carrier().rank(), name);
                    m = Bimodule::from_basis_actions(std::move(g), left, right, la, ra);
                }
            } else {
                fail("unknown bimodule kind '" + kind + "'", name);
            }
        } catch (const ValidationError& e) {
            visiting.erase("bimodule:" + name);
            invalid_bimodules.insert(name);
            record("bimodule", name, e.report);
            return nullptr;
        } catch (const Json::exception& e) {
            fail(std::string("malformed bimodule definition: ") + e.what(), name);
        }
        visiting.erase("bimodule:" + name);
        if (!m) {
            invalid_bimodules.insert(name);
            record_skipped("bimodule", name, skip_reason);
            return nullptr;
        }
        record("bimodule", name, validate_bimodule(*m));
        result.workspace.bimodules.emplace(name, m);
        return m;
    }

    MoritaContext::Ptr context(const std::string& name) {
        auto hit = result.workspace.contexts.find(name);
        if (hit != result.workspace.contexts.end()) return hit->second;
        if (invalid_contexts.count(name)) return nullptr;
        const Json* def = find_def("contexts", name);
        if (!def) fail("unknown context", name);
        if (!visiting.insert("context:" + name).second) fail("cyclic definition", name);

        MoritaContext::Ptr c;
        std::string skip_reason;
        try {
            auto R = ring(def->value("R", ""));
            auto S = ring(def->value("S", ""));
            auto M = bimodule(def->value("M", ""));
            auto N = bimodule(def->value("N", ""));
            if (!R || !S || !M || !N) {
                skip_reason = "a component is invalid";
            } else {
                // "zero" or a basis-level table, extended bi-additively
                auto pairing = [&](const char* key, const AbGroup& target, std::size_t rows,
                                   std::size_t cols) -> std::vector<Elem> {
                    const auto& j = def->at(key);
                    if (j.is_string()) {
                        if (j.get<std::string>() != "zero")
                            fail("pairing must be \"zero\" or a table", name);
                        return std::vector<Elem>(rows * cols, 0);
                    }
                    return parse_elem_matrix(target, j, rows, cols, name);
                };
                auto bb = pairing("bracket", R->carrier(), M->carrier().rank(),
                                  N->carrier().rank());
                auto pb = pairing("paren", S->carrier(), N->carrier().rank(),
                                  M->carrier().rank());
                c = MoritaContext::from_basis_pairings(R, S, M, N, bb, pb);
            }
        } catch (const ValidationError& e) {
            visiting.erase("context:" + name);
            invalid_contexts.insert(name);
            record("context", name, e.report);
            return nullptr;
        } catch (const Json::exception& e) {
            fail(std::string("malformed context definition: ") + e.what(), name);
        }
        visiting.erase("context:" + name);
        if (!c) {
            invalid_contexts.insert(name);
            record_skipped("context", name, skip_reason);
            return nullptr;
        }
        record("context", name, validate_context(*c));
        result.workspace.contexts.emplace(name, c);
        return c;
    }

    ContextRing::Ptr context_ring(const std::string& name) {
        auto hit = result.workspace.context_rings.find(name);
        if (hit != result.workspace.context_rings.end()) return hit->second;
        auto c = context(name);
        if (!c) return nullptr;
        auto T = ContextRing::build(c);
        result.workspace.context_rings.emplace(name, T);
        return T;
    }

    void run() {
        if (root.contains("search_bound"))
            result.workspace.search_bound = root.at("search_bound").get<std::uint32_t>();

        // Deterministic order: nlohmann::json objects iterate sorted by key.
        if (root.contains("rings"))
            for (auto it = root.at("rings").begin(); it != root.at("rings").end(); ++it)
                ring(it.key());
        if (root.contains("bimodules"))
            for (auto it = root.at("bimodules").begin(); it != root.at("bimodules").end(); ++it)
                bimodule(it.key());
        if (root.contains("contexts"))
            for (auto it = root.at("contexts").begin(); it != root.at("contexts").end(); ++it) {
                context(it.key());
                if (result.workspace.contexts.count(it.key())) context_ring(it.key());
            }

        if (root.contains("pairs"))
            for (auto it = root.at("pairs").begin(); it != root.at("pairs").end(); ++it) {
                const auto& def = it.value();
                std::string left = def.value("left", ""), right = def.value("right", "");
                if (!root.contains("contexts") || !root.at("contexts").contains(left))
                    fail("pair references unknown context '" + left + "'", it.key());
                if (!root.at("contexts").contains(right))
                    fail("pair references unknown context '" + right + "'", it.key());
                result.workspace.pairs.emplace(it.key(),
                                               Workspace::PairRef{std::move(left), std::move(right)});
            }

        if (root.contains("claims")) {
            static const std::set<std::string> known = {
                claims::strict_graded,        claims::central_idempotents,
                claims::indecomposable_context, claims::semigraded_classification,
                claims::zero_maps_complete,   claims::inner_obstruction,
                claims::group_structure,      claims::decomposable_swap,
                claims::regular_module_indecomposable};
            for (const auto& cj : root.at("claims")) {
                Workspace::ClaimBinding b;
                b.claim = cj.value("claim", "");
                if (!known.count(b.claim)) fail("unknown claim id '" + b.claim + "'");
                for (auto it = cj.begin(); it != cj.end(); ++it) {
                    if (it.key() == "claim") continue;
                    b.args[it.key()] = it.value().get<std::string>();
                }
                auto need = [&](const char* key) {
                    if (!b.args.count(key))
                        fail("claim '" + b.claim + "' needs argument '" + key + "'");
                };
                auto check_context = [&](const std::string& n) {
                    if (!root.contains("contexts") || !root.at("contexts").contains(n))
                        fail("claim references unknown context '" + n + "'");
                };
                if (b.claim == claims::strict_graded ||
                    b.claim == claims::semigraded_classification ||
                    b.claim == claims::zero_maps_complete) {
                    need("pair");
                    if (!result.workspace.pairs.count(b.args["pair"]) &&
                        !(root.contains("contexts") && root.at("contexts").contains(b.args["pair"])))
                        fail("claim references unknown pair '" + b.args["pair"] + "'");
                } else if (b.claim == claims::regular_module_indecomposable) {
                    need("ring");
                    if (!root.contains("rings") || !root.at("rings").contains(b.args["ring"]))
                        fail("claim references unknown ring '" + b.args["ring"] + "'");
                } else if (b.claim == claims::decomposable_swap) {
                    need("context");
                    need("factor");
                    check_context(b.args["context"]);
                    if (!root.contains("rings") || !root.at("rings").contains(b.args["factor"]))
                        fail("claim references unknown ring '" + b.args["factor"] + "'");
                } else {
                    need("context");
                    check_context(b.args["context"]);
                }
                result.workspace.claims.push_back(std::move(b));
            }
        }
    }
};

}  // namespace

const FinRing::Ptr& Workspace::ring(const std::string& name) const {
    auto it = rings.find(name);
    if (it == rings.end()) fail("unknown ring", name);
    return it->second;
}

const Bimodule::Ptr& Workspace::bimodule(const std::string& name) const {
    auto it = bimodules.find(name);
    if (it == bimodules.end()) fail("unknown bimodule", name);
    return it->second;
}

const MoritaContext::Ptr& Workspace::context(const std::string& name) const {
    auto it = contexts.find(name);
    if (it == contexts.end()) fail("unknown context", name);
    return it->second;
}

const ContextRing::Ptr& Workspace::context_ring(const std::string& name) const {
    auto it = context_rings.find(name);
    if (it == context_rings.end()) fail("unknown context", name);
    return it->second;
}

const Workspace::PairRef& Workspace::pair(const std::string& name) const {
    auto it = pairs.find(name);
    if (it == pairs.end()) fail("unknown pair", name);
    return it->second;
}

Workspace::PairRef Workspace::resolve_pair(const std::string& name) const {
    auto it = pairs.find(name);
    if (it != pairs.end()) return it->second;
    if (contexts.count(name)) return PairRef{name, name};
    fail("unknown pair or context", name);
}

LoadResult parse_workspace(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ConfigError("parse error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + e.what());
    }
    if (!root.is_object()) throw ConfigError("workspace config must be a JSON object");
    Loader loader(root);
    loader.run();
    return std::move(loader.result);
}

LoadResult load_workspace_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_workspace(buf.str());
}

Workspace load_workspace_strict(const std::string& path) {
    LoadResult res = load_workspace_file(path);
    if (!res.all_ok) {
        for (const auto& item : res.items)
            if (!item.ok())
                fail(item.skipped ? "object skipped: " + item.reason
                                  : "validation failed: " + item.report.summary(),
                     item.name);
    }
    return std::move(res.workspace);
}

}  // namespace gmr
