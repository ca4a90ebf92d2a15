#pragma once

#include "equivart/arcs.hpp"
#include "equivart/compare.hpp"
#include "equivart/join.hpp"
#include "equivart/persistence.hpp"
#include "equivart/rings.hpp"

#include <json.hpp>

#include <string>

namespace equivart {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "equivart/1";

// ---- measures --------------------------------------------------------------

inline Json measure_to_json(const CircleMeasure& mu) {
    Json atoms = Json::array();
    for (const auto& a : mu.atoms())
        atoms.push_back({{"turns", format_rational(a.angle.turns)}, {"weight", format_rational(a.weight)}});
    return Json{{"atoms", atoms}};
}

inline CircleMeasure measure_from_json(const Json& j) {
    if (!j.contains("atoms") || !j["atoms"].is_array())
        throw std::invalid_argument("measure JSON needs an \"atoms\" array");
    std::vector<std::pair<Angle, Rational>> atoms;
    for (const auto& a : j["atoms"]) {
        Rational w = parse_rational(a.at("weight").get<std::string>());
        if (w <= 0) throw std::invalid_argument("atom weights must be positive");
        atoms.emplace_back(Angle::of_turns(parse_rational(a.at("turns").get<std::string>())), w);
    }
    return CircleMeasure::from_atoms(std::move(atoms));
}

// ---- arcs and polygons -----------------------------------------------------

inline Json interval_to_json(const CircularInterval& iv) {
    return Json{{"start_turns", format_rational(iv.start.turns)},
                {"end_turns", format_rational(iv.end.turns)}};
}

inline Json arcs_to_json(const ArcDecomposition& ad) {
    Json arcs = Json::array();
    for (size_t i = 0; i < ad.arcs.size(); ++i) {
        Json a = interval_to_json(ad.arcs[i]);
        a["mass"] = format_rational(ad.masses[i]);
        arcs.push_back(a);
    }
    return Json{{"stratum_k", ad.stratum_k}, {"arcs", arcs}};
}

inline Json polygon_to_json(const RegularPolygonalMeasure& rpm) {
    Json weights = Json::array();
    for (const auto& w : rpm.weights) weights.push_back(format_rational(w));
    return Json{{"k", rpm.k},
                {"base_turns", format_rational(rpm.base.turns)},
                {"weights", weights}};
}

// ---- join points -----------------------------------------------------------

inline Json join_point_to_json(const JoinPoint& p) {
    Json comps = Json::array();
    for (const auto& c : p.components)
        comps.push_back({{"index", c.index},
                         {"t", format_rational(c.t)},
                         {"base_turns", format_rational(c.base.turns)}});
    return Json{{"components", comps}};
}

inline JoinPoint join_point_from_json(const Json& j) {
    std::vector<JoinComponent> comps;
    for (const auto& c : j.at("components")) {
        JoinComponent jc;
        jc.index = c.at("index").get<int>();
        jc.t = parse_rational(c.at("t").get<std::string>());
        jc.base = Angle::of_turns(parse_rational(c.at("base_turns").get<std::string>()));
        comps.push_back(std::move(jc));
    }
    return JoinPoint::make(std::move(comps));
}

// ---- rings and scale barcodes ----------------------------------------------

inline Json scale_interval_to_json(const ScaleInterval& iv) {
    Json j{{"start_turns", format_rational(iv.start_turns)},
           {"start_radians", to_double(iv.start_turns) * kTwoPi}};
    if (iv.end_turns) {
        j["end_turns"] = format_rational(*iv.end_turns);
        j["end_radians"] = to_double(*iv.end_turns) * kTwoPi;
    } else {
        j["end_turns"] = "inf";
        j["end_radians"] = "inf";
    }
    j["piece"] = iv.piece.str();
    return j;
}

// ---- oracle barcodes -------------------------------------------------------

inline Json barcode_to_json(const Barcode& bc) {
    Json bars = Json::array();
    for (const auto& iv : bc.intervals) {
        Json b{{"dim", iv.dim}, {"birth_turns", format_rational(iv.birth)}};
        b["death_turns"] = iv.death ? Json(format_rational(*iv.death)) : Json("inf");
        bars.push_back(b);
    }
    return Json{{"n", bc.n}, {"max_dim", bc.max_dim}, {"intervals", bars}};
}

inline std::string barcode_to_csv(const Barcode& bc) {
    std::string out = "dim,birth_turns,death_turns\n";
    for (const auto& iv : bc.intervals) {
        out += std::to_string(iv.dim) + "," + format_rational(iv.birth) + ",";
        out += iv.death ? format_rational(*iv.death) : std::string("inf");
        out += "\n";
    }
    return out;
}

inline std::string scale_barcode_to_csv(const std::vector<ScaleInterval>& intervals) {
    std::string out = "start_turns,end_turns,start_radians,end_radians,piece\n";
    for (const auto& iv : intervals) {
        out += format_rational(iv.start_turns) + ",";
        out += iv.end_turns ? format_rational(*iv.end_turns) : std::string("inf");
        out += "," + std::to_string(to_double(iv.start_turns) * kTwoPi) + ",";
        out += iv.end_turns ? std::to_string(to_double(*iv.end_turns) * kTwoPi) : std::string("inf");
        out += "," + iv.piece.str() + "\n";
    }
    return out;
}

// ---- comparison reports ----------------------------------------------------

inline Json comparison_to_json(const TheoryComparison& rep) {
    Json j{{"n", rep.n},
           {"r_turns", format_rational(rep.r_turns)},
           {"r_radians", to_double(rep.r_turns) * kTwoPi},
           {"max_dim", rep.max_dim},
           {"field", coef_field_name(rep.field)}};
    j["band"] = rep.band ? Json(*rep.band) : Json("pt");
    j["oracle_betti"] = rep.oracle_betti;
    j["predicted_betti"] = rep.predicted_betti;
    j["match"] = rep.match;
    j["near_critical"] = rep.near_critical;
    if (rep.near_critical_ratio) j["near_critical_ratio_turns"] = format_rational(*rep.near_critical_ratio);
    return j;
}

}  // namespace equivart
