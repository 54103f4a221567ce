#include "gmr/report.hpp"

#include "gmr/version.hpp"

namespace gmr {

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

Json json_table(const std::vector<Elem>& table, const ReportOptions& opts) {
    std::string flat;
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (i) flat += ",";
        flat += std::to_string(table[i]);
    }
    Json j;
    j["size"] = table.size();
    j["hash"] = fnv1a64_hex(flat);
    if (opts.full_tables || table.size() <= opts.elide_above) j["entries"] = table;
    return j;
}

Json json_coords(const AbGroup& g, Elem a) {
    Json j = Json::array();
    for (auto c : g.coords(a)) j.push_back(c);
    return j;
}

Json json_validation(const ValidationReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json j;
        j["check"] = c.name;
        j["passed"] = c.passed;
        if (!c.passed) j["witness"] = c.witness;
        checks.push_back(std::move(j));
    }
    Json j;
    j["ok"] = rep.ok();
    j["checks"] = std::move(checks);
    return j;
}

Json json_verdict(const Verdict& v) {
    Json hyp = Json::array();
    for (const auto& h : v.hypotheses) {
        Json j;
        j["hypothesis"] = h.name;
        j["passed"] = h.passed;
        hyp.push_back(std::move(j));
    }
    Json j;
    j["claim"] = v.claim;
    j["subject"] = v.subject;
    j["hypotheses"] = std::move(hyp);
    j["status"] = to_string(v.status);
    j["notes"] = v.notes;
    return j;
}

Json report_envelope(const std::string& command, const Json& args) {
    Json j;
    j["tool"] = "gmr";
    j["version"] = kVersion;
    j["schema"] = kReportSchema;
    j["command"] = command;
    j["arguments"] = args;
    return j;
}

std::string render_structured(const Json& report) { return report.dump(2) + "\n"; }

namespace {

void render_value(const Json& v, const std::string& indent, std::string& out);

void render_object(const Json& v, const std::string& indent, std::string& out) {
    for (auto it = v.begin(); it != v.end(); ++it) {
        out += indent + it.key() + ":";
        if (it.value().is_object() || it.value().is_array()) {
            out += "\n";
            render_value(it.value(), indent + "  ", out);
        } else {
            out += " " + it.value().dump() + "\n";
        }
    }
}

void render_value(const Json& v, const std::string& indent, std::string& out) {
    if (v.is_object()) {
        render_object(v, indent, out);
    } else if (v.is_array()) {
        bool scalars = true;
        for (const auto& e : v)
            if (e.is_object() || e.is_array()) scalars = false;
        if (scalars) {
            out += indent + v.dump() + "\n";
            return;
        }
        for (const auto& e : v) {
            out += indent + "-\n";
            render_value(e, indent + "  ", out);
        }
    } else {
        out += indent + v.dump() + "\n";
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::string out;
    render_value(report, "", out);
    return out;
}

}  // namespace gmr
