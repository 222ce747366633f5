#include "coxdim/json_io.hpp"

namespace coxdim {

namespace {

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + ": expected an array");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string())
            throw InputError(std::string(what) + ": expected an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InputError("graph JSON must have \"vertices\" and \"edges\"");
    const auto vertices = string_list(j.at("vertices"), "vertices");
    std::vector<std::pair<std::string, std::string>> edges;
    if (!j.at("edges").is_array()) throw InputError("edges: expected an array");
    for (const auto& e : j.at("edges")) {
        const auto pair = string_list(e, "edge");
        if (pair.size() != 2) throw InputError("edge: expected exactly two endpoints");
        edges.emplace_back(pair[0], pair[1]);
    }
    return Graph::from_names(vertices, edges);
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = g.vertex_names();
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges())
        edges.push_back({g.vertex_names()[a], g.vertex_names()[b]});
    j["edges"] = std::move(edges);
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("maximal_faces"))
        throw InputError("complex JSON must have \"maximal_faces\"");
    if (!j.at("maximal_faces").is_array())
        throw InputError("maximal_faces: expected an array");
    std::vector<std::vector<std::string>> faces;
    for (const auto& f : j.at("maximal_faces")) faces.push_back(string_list(f, "face"));
    return SimplicialComplex::from_maximal_faces(faces);
}

Json complex_to_json(const SimplicialComplex& k) {
    Json faces = Json::array();
    for (const auto& f : k.maximal_faces()) faces.push_back(k.face_names(f));
    Json j;
    j["maximal_faces"] = std::move(faces);
    return j;
}

std::vector<FactorProfile> profiles_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw InputError("profiles: expected a nonempty array");
    std::vector<FactorProfile> out;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("d") || !item.contains("exponent"))
            throw InputError("profile: expected {\"d\": ..., \"exponent\": ...}");
        FactorProfile prof;
        prof.top_dimension = item.at("d").get<int>();
        const long long exponent = item.at("exponent").get<long long>();
        if (exponent < 2) throw InputError("profile: exponent must be >= 2");
        prof.top_group = cyclic(Integer(exponent));
        prof.multiplicity = item.value("mult", 1);
        out.push_back(std::move(prof));
    }
    return out;
}

Json group_to_json(const FgAbelianGroup& g) {
    Json torsion = Json::array();
    for (const Integer& d : g.torsion) torsion.push_back(d.str());
    Json j;
    j["rank"] = g.rank;
    j["torsion"] = std::move(torsion);
    j["display"] = g.to_string();
    return j;
}

Json certificate_to_json(const RacgCertificate& c) {
    Json j;
    j["hyperbolic"] = c.hyperbolic;
    j["one_ended"] = c.one_ended;
    j["no_dominating_vertex"] = c.no_dominating_vertex;
    j["star_complements_connected"] = c.star_complements_connected;
    j["maximal_cover"] = c.maximal_cover;
    j["flag"] = c.flag;
    j["connected"] = c.connected;
    j["dimension"] = c.dimension;
    j["top_reduced_cohomology"] = group_to_json(c.top_reduced_cohomology);
    j["vcd"] = c.vcd;
    Json ring;
    ring["hypothesis_holds"] = c.top_group_ring_cohomology.hypothesis_holds;
    if (c.top_group_ring_cohomology.hypothesis_holds)
        ring["value"] = group_to_json(c.top_group_ring_cohomology.value);
    else
        ring["value"] = nullptr;
    j["top_group_ring_cohomology"] = std::move(ring);
    j["dimension_rigid"] = c.dimension_rigid;
    return j;
}

Json gp_report_to_json(const GpReport& r) {
    Json j;
    j["p"] = r.p;
    j["subdivisions"] = r.subdivisions;
    j["builder"] = r.builder == LBuilder::Ring ? "ring" : "barycentric";
    j["promoted_at"] = r.promoted_at;
    Json sizes;
    sizes["L_vertices"] = r.l_vertices;
    sizes["L_faces"] = r.l_faces;
    sizes["K_sing_vertices"] = r.k_sing_vertices;
    j["sizes"] = std::move(sizes);
    j["certificate"] = certificate_to_json(r.certificate);
    Json coh;
    coh["h1_Z"] = group_to_json(r.h1_Z);
    coh["h2_Z"] = group_to_json(r.h2_Z);
    coh["h1_L"] = group_to_json(r.h1_L);
    coh["h2_L_reduced"] = group_to_json(r.h2_L_reduced);
    coh["h0_L_sing"] = group_to_json(r.h0_L_sing);
    coh["h1_L_sing"] = group_to_json(r.h1_L_sing);
    coh["h2_K_sing"] = group_to_json(r.h2_K_sing);
    coh["relative_h3"] = group_to_json(r.relative_h3);
    j["cohomology"] = std::move(coh);
    Json checks;
    checks["graph_conditions"] = r.checks.graph_conditions;
    checks["h2_L_is_Z_p"] = r.checks.h2_L_is_Z_p;
    checks["vcd_is_3"] = r.checks.vcd_is_3;
    checks["group_ring_is_Z_p"] = r.checks.group_ring_is_Z_p;
    checks["h1_Z_zero"] = r.checks.h1_Z_zero;
    checks["h2_Z_is_Z_p"] = r.checks.h2_Z_is_Z_p;
    checks["h1_L_zero"] = r.checks.h1_L_zero;
    checks["h2_L_matches_Z"] = r.checks.h2_L_matches_Z;
    checks["l_sing_is_circle_and_point"] = r.checks.l_sing_is_circle_and_point;
    checks["k_sing_rank_at_least_1"] = r.checks.k_sing_rank_at_least_1;
    checks["relative_matches_h2_k_sing"] = r.checks.relative_matches_h2_k_sing;
    checks["mayer_vietoris_rank_bound"] = r.checks.mayer_vietoris_rank_bound;
    checks["action_regular"] = r.checks.action_regular;
    j["checks"] = std::move(checks);
    j["verdict"] = r.verdict;
    return j;
}

Json product_report_to_json(const ProductReport& r) {
    Json j;
    j["vcd_upper"] = r.vcd_upper;
    if (r.vcd_exact)
        j["vcd_exact"] = *r.vcd_exact;
    else
        j["vcd_exact"] = nullptr;
    j["bredon_cd"] = r.bredon_cd;
    j["top_group"] = group_to_json(r.top_group);
    j["regime"] = to_string(r.regime);
    j["band_certified_top"] = r.band_certified_top;
    Json band = Json::array();
    for (int d = 0; d <= r.band.top_degree(); ++d) {
        Json entry;
        entry["degree"] = d;
        entry["entry"] = r.band.get(d).to_string();
        band.push_back(std::move(entry));
    }
    j["band"] = std::move(band);
    return j;
}

Json tree_to_json(const QuotientTree& t) {
    auto name = [&](int v) {
        return v < t.special_count ? "G" + std::to_string(v + 1)
                                   : "t" + std::to_string(v - t.special_count + 1);
    };
    Json edges = Json::array();
    for (const auto& [a, b] : t.edges) edges.push_back({name(a), name(b)});
    Json j;
    j["special"] = t.special_count;
    j["trivial"] = t.trivial_count;
    j["edges"] = std::move(edges);
    Json degs = Json::array();
    const auto deg = t.degrees();
    for (int v = 0; v < t.special_count; ++v) degs.push_back(deg[v]);
    j["degree_vector"] = std::move(degs);
    return j;
}

Json stab_report_to_json(const StabBoundReport& r) {
    Json j;
    j["r"] = r.r;
    j["tree_count"] = r.tree_count;
    j["bound"] = 2 * r.r - 2;
    j["violations"] = r.violations;
    j["equality_count"] = r.equality_count;
    return j;
}

Json out_bounds_to_json(const OutBounds& b) {
    Json j;
    j["r"] = b.r;
    j["tree_count"] = b.tree_count;
    j["vcd_upper"] = b.vcd_upper;
    j["bredon_cd_lower"] = b.bredon_cd_lower;
    j["gap"] = b.gap;
    return j;
}

Json aut_bounds_to_json(const AutBounds& b) {
    Json j;
    j["factors"] = b.factors;
    j["vcd_upper"] = b.vcd_upper;
    j["cd_lower"] = b.cd_lower;
    return j;
}

}  // namespace coxdim
