#pragma once

#include <map>
#include <string>
#include <vector>

#include "gmr/context.hpp"

namespace gmr {

/// Named algebraic objects loaded from a workspace config file, plus the iso
/// query pairs and claim bindings that commands operate on.
struct Workspace {
    std::uint32_t search_bound = 256;

    std::map<std::string, FinRing::Ptr> rings;
    std::map<std::string, Bimodule::Ptr> bimodules;
    std::map<std::string, MoritaContext::Ptr> contexts;
    std::map<std::string, ContextRing::Ptr> context_rings;  // keyed by context name

    struct PairRef {
        std::string left, right;  // context names
    };
    std::map<std::string, PairRef> pairs;

    struct ClaimBinding {
        std::string claim;
        std::map<std::string, std::string> args;  // context / pair / ring / factor
    };
    std::vector<ClaimBinding> claims;

    const FinRing::Ptr& ring(const std::string& name) const;
    const Bimodule::Ptr& bimodule(const std::string& name) const;
    const MoritaContext::Ptr& context(const std::string& name) const;
    const ContextRing::Ptr& context_ring(const std::string& name) const;
    const PairRef& pair(const std::string& name) const;

    /// Resolves a pair name, falling back to a context name as a self-pair.
    PairRef resolve_pair(const std::string& name) const;
};

/// Per-object validation outcome gathered while loading.
struct LoadItem {
    std::string kind;  // ring | bimodule | context
    std::string name;
    bool skipped = false;     // a dependency was invalid
    std::string reason;       // why skipped
    ValidationReport report;  // meaningful when not skipped
    bool ok() const { return !skipped && report.ok(); }
};

struct LoadResult {
    Workspace workspace;
    std::vector<LoadItem> items;
    bool all_ok = true;
};

/// Parses and builds every named object, collecting validation reports.
/// Structural problems (syntax, dangling names, malformed tables) throw
/// ConfigError; axiom failures are recorded per object.
LoadResult parse_workspace(const std::string& text);

LoadResult load_workspace_file(const std::string& path);

/// Loads and requires every object to validate; throws ConfigError naming the
/// first invalid object otherwise.
Workspace load_workspace_strict(const std::string& path);

}  // namespace gmr
