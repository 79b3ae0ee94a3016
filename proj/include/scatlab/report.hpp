#pragma once

// JSON/CSV serialization for reports (schema scattered-lab/v1).  Field
// elements are emitted as coordinate vectors over F_p so that every report
// is reproducible independently of table layout.

#include <ostream>
#include <string>

#include "json.hpp"

#include "equiv.hpp"
#include "families.hpp"
#include "mrd.hpp"

namespace scatlab {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "scattered-lab/v1";

inline json elem_json(const Field& F, Elem a) { return json(F.coords(a)); }

inline json qpoly_json(const QPoly& f) {
    json out = json::array();
    for (Elem c : f.c) out.push_back(elem_json(*f.F, c));
    return out;
}

inline json field_json(const Field& F) {
    return {{"p", F.p()}, {"e", F.e()}, {"n", F.n()}, {"q", F.q()}, {"mu", F.modulus()}};
}

inline json famspec_json(const Field& F, const FamilySpec& spec) {
    json out{{"tag", family_name(spec.tag)}};
    switch (spec.tag) {
        case FamilyTag::pr: out["s"] = spec.s; break;
        case FamilyTag::lp:
        case FamilyTag::cmpz:
            out["s"] = spec.s;
            out["delta"] = elem_json(F, spec.delta);
            break;
        case FamilyTag::tri: out["b"] = elem_json(F, spec.b); break;
    }
    return out;
}

inline json linmap_json(const Field& F, const LinearMap& m) {
    return {{"a", elem_json(F, m.a)}, {"b", elem_json(F, m.b)}, {"c", elem_json(F, m.c)}, {"d", elem_json(F, m.d)}};
}

inline json semimap_json(const Field& F, const SemilinearMap& w) {
    json out = linmap_json(F, w.m);
    out["j"] = w.j;
    return out;
}

inline json linset_json(const Field& F, const LinearSet& L, bool with_points = false) {
    json hist = json::object();
    for (auto& [w, cnt] : L.weight_histogram()) hist[std::to_string(w)] = cnt;
    json out{{"points", L.size()}, {"scattered", L.scattered()}, {"weight_histogram", hist}};
    if (with_points) {
        json pts = json::array();
        for (auto& [pt, w] : L.points)
            pts.push_back({{"slope", pt.inf ? json("inf") : elem_json(F, pt.m)}, {"weight", w}});
        out["point_list"] = pts;
    }
    return out;
}

inline json stab_json(const Field& F, const StabReport& rep, bool with_elements = false) {
    json gens = json::array();
    for (auto& g : rep.generators) gens.push_back(linmap_json(F, g));
    json out{{"order", rep.order}, {"linear_only", rep.linear_only}, {"generators", gens}};
    if (with_elements) {
        json els = json::array();
        for (auto& m : rep.elements) els.push_back(linmap_json(F, m));
        out["elements"] = els;
    }
    return out;
}

inline const char* scan_status_name(ScanStatus s) {
    switch (s) {
        case ScanStatus::found: return "found";
        case ScanStatus::exhausted_none: return "exhausted_none";
        case ScanStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

inline json equiv_json(const Field& F, const EquivResult& r) {
    json out{{"status", scan_status_name(r.status)},
             {"equivalent", r.status == ScanStatus::found},
             {"scan", r.status == ScanStatus::budget_exceeded ? "partial" : "complete"},
             {"total_space", r.total_space},
             {"scanned", r.scanned}};
    if (r.witness) out["witness"] = semimap_json(F, *r.witness);
    if (r.status == ScanStatus::budget_exceeded) out["checkpoint"] = std::to_string(r.next_token);
    return out;
}

inline json idealiser_json(const IdealiserReport& r) {
    return {{"kind", r.kind == IdealiserKind::scalars ? "Scalars" : "FullCode"}, {"order", r.order}};
}

inline void write_weight_histogram_csv(std::ostream& os, const LinearSet& L) {
    os << "weight,points\n";
    for (auto& [w, cnt] : L.weight_histogram()) os << w << "," << cnt << "\n";
}

inline void write_rank_spectrum_csv(std::ostream& os, const std::map<uint32_t, uint64_t>& spec) {
    os << "rank,classes\n";
    for (auto& [r, cnt] : spec) os << r << "," << cnt << "\n";
}

// structural validation mirroring schema/report.schema.json; returns the
// list of violations (empty = valid)
inline std::vector<std::string> validate_report(const json& rep) {
    std::vector<std::string> errs;
    auto need = [&](const char* key, bool ok) {
        if (!ok) errs.push_back(std::string("missing or ill-typed field: ") + key);
    };
    need("schema_version", rep.contains("schema_version") && rep["schema_version"] == kSchemaVersion);
    need("command", rep.contains("command") && rep["command"].is_string());
    need("seed", rep.contains("seed") && rep["seed"].is_number_unsigned());
    need("threads", rep.contains("threads") && rep["threads"].is_number_unsigned());
    bool single_field = !rep.contains("command") || rep["command"] != "suite";
    if (single_field) {
        need("field", rep.contains("field") && rep["field"].is_object());
        need("params", rep.contains("params") && rep["params"].is_object());
    }
    if (rep.contains("field") && rep["field"].is_object()) {
        const json& f = rep["field"];
        for (const char* k : {"p", "e", "n", "q"}) need((std::string("field.") + k).c_str(), f.contains(k) && f[k].is_number_unsigned());
        need("field.mu", f.contains("mu") && f["mu"].is_array());
    }
    need("results", rep.contains("results") && rep["results"].is_object());
    need("timing", rep.contains("timing") && rep["timing"].is_object());
    if (rep.contains("timing") && rep["timing"].is_object()) {
        need("timing.timestamp", rep["timing"].contains("timestamp") && rep["timing"]["timestamp"].is_string());
        need("timing.elapsed_ms", rep["timing"].contains("elapsed_ms") && rep["timing"]["elapsed_ms"].is_number());
    }
    return errs;
}

} // namespace scatlab
