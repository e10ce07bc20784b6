#include "pentad/json_io.hpp"

#include "pentad/error.hpp"

#include <fstream>
#include <sstream>

namespace pentad {

Json rank_matrix_json(const RankMatrix& phi) {
    Json j;
    j["m"] = phi.m;
    Json values = Json::array();
    for (unsigned I = 0; I <= phi.full_mask(); ++I) values.push_back(phi(I));
    j["values"] = values;
    return j;
}

RankMatrix rank_matrix_from_json(const Json& j) {
    if (!j.contains("m") || !j.contains("values")) fail("malformed_json", "need m and values");
    int m = j["m"].get<int>();
    if (m < 1 || m > 12) fail("malformed_json", "unsupported ground-set size");
    RankMatrix phi(m);
    const auto& vals = j["values"];
    if (vals.size() != (std::size_t(1) << m)) fail("malformed_json", "need 2^m values");
    for (unsigned I = 0; I < vals.size(); ++I) phi.set(I, vals[I].get<int>());
    return phi;
}

Json splitting_json(const Splitting& s) {
    Json arr = Json::array();
    for (const auto& b : s.blocks) {
        Json blk;
        Json pts = Json::array();
        for (int i = 0; i < s.m; ++i)
            if (b.mask & (1u << i)) pts.push_back(i + 1);
        blk["block"] = pts;
        blk["rank"] = b.rank;
        arr.push_back(blk);
    }
    return arr;
}

namespace {

Json param_json(const ProjParam& p) {
    Json arr = Json::array();
    for (const Rat& c : p.coords) arr.push_back(rat_to_string(c));
    return arr;
}

} // namespace

Json orbit_class_json(const OrbitClass& o) {
    Json j;
    j["rank_type"] = o.type_label;
    j["family"] = o.family.tag();
    if (o.params.empty()) {
        j["parameter"] = nullptr;
    } else if (o.params.size() == 1) {
        j["parameter"] = param_json(o.params[0]);
    } else {
        Json arr = Json::array();
        for (const auto& p : o.params) arr.push_back(param_json(p));
        j["parameter"] = arr;
    }
    if (!o.frame.empty()) j["frame"] = o.frame;
    return j;
}

Json config_json(const ProjConfig& v) {
    Json j;
    j["n"] = v.n;
    j["m"] = v.m;
    Json pts = Json::array();
    for (int c = 0; c < v.m; ++c) {
        Json col = Json::array();
        for (const Rat& x : v.point(c)) col.push_back(rat_to_string(x));
        pts.push_back(col);
    }
    j["points"] = pts;
    return j;
}

Json closure_description_json(const ClosureDescription& d) {
    const Catalogue& cat = Catalogue::get();
    Json j;
    j["orbit"] = orbit_class_json(d.orbit);
    Json comps = Json::array();
    for (const auto& c : d.components) {
        Json e;
        switch (c.kind) {
            case ClosureComponent::Kind::Orbit: {
                e["kind"] = "orbit";
                OrbitClass oc = classify(c.sample);
                e["family"] = oc.family.tag();
                e["parameter"] = oc.params.empty() ? Json(nullptr)
                                 : oc.params.size() == 1
                                     ? Json(param_json(oc.params[0]))
                                     : Json(Json::array({param_json(oc.params[0]),
                                                         param_json(oc.params[1])}));
                break;
            }
            case ClosureComponent::Kind::ParamSweep: {
                e["kind"] = "param_family";
                OrbitClass base = d.orbit;
                e["family"] = "phi[5^2]";
                e["fixed_parameter"] = param_json(base.params.at(0));
                e["free_parameter"] = "P^1";
                e["free_point"] = c.sweep_col + 1;
                break;
            }
            case ClosureComponent::Kind::Fibre:
                e["kind"] = "fibre";
                e["family"] = cat.entries()[c.node].family.tag();
                e["rank_type"] = cat.entries()[c.node].type_label;
                break;
            case ClosureComponent::Kind::VarpiFibre:
                e["kind"] = "varpi_fibre";
                e["splitting"] = splitting_json(c.split);
                break;
            case ClosureComponent::Kind::LowRankLocus:
                e["kind"] = "low_rank_locus";
                e["rank"] = c.low_rank;
                break;
        }
        comps.push_back(e);
    }
    j["components"] = comps;
    return j;
}

Json catalogue_json() {
    const Catalogue& cat = Catalogue::get();
    Json arr = Json::array();
    for (const auto& e : cat.entries()) {
        Json j;
        j["rank_matrix"] = rank_matrix_json(e.phi);
        j["type_label"] = e.type_label;
        j["splitting"] = splitting_json(e.rho_split);
        j["family"] = e.family.tag();
        j["single_orbit"] = e.single_orbit;
        arr.push_back(j);
    }
    return arr;
}

ProjConfig parse_config_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& ex) {
        fail("malformed_json", std::string("config is not valid JSON: ") + ex.what());
    }
    if (!j.contains("n") || !j.contains("m") || !j.contains("points"))
        fail("malformed_json", "config needs n, m and points");
    int n = j["n"].get<int>();
    int m = j["m"].get<int>();
    const auto& pts = j["points"];
    if (!pts.is_array() || static_cast<int>(pts.size()) != m)
        fail("malformed_json", "points must list m columns");
    std::vector<std::vector<Rat>> cols;
    for (const auto& pt : pts) {
        if (!pt.is_array() || static_cast<int>(pt.size()) != n)
            fail("malformed_json", "each point needs n coordinates");
        std::vector<Rat> col;
        for (const auto& entry : pt) {
            if (entry.is_number_integer())
                col.emplace_back(entry.get<long>());
            else if (entry.is_string())
                col.push_back(rat_from_string(entry.get<std::string>()));
            else
                fail("decimal_literal",
                     "coordinates must be integers or \"a/b\" strings, got " + entry.dump());
        }
        cols.push_back(std::move(col));
    }
    return config_from_columns(n, cols);
}

ProjConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("io_error", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

} // namespace pentad
