#include "coxdim/gp.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace coxdim {

namespace {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; static_cast<long long>(d) * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::vector<std::string> image_face(const SimplicialComplex& k, const GroupAction& action,
                                    const VertexList& f) {
    std::vector<std::string> out;
    out.reserve(f.size());
    for (int v : f) out.push_back(action.generator.at(k.name_of(v)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

void validate_action(const SimplicialComplex& k, const GroupAction& action) {
    if (action.order < 1) throw InputError("group action: order must be positive");
    if (static_cast<int>(action.generator.size()) != k.vertex_count())
        throw InputError("group action: generator must permute all vertices");
    std::vector<char> hit(k.vertex_count(), 0);
    for (const auto& [from, to] : action.generator) {
        if (k.index_of(from) < 0 || k.index_of(to) < 0)
            throw InputError("group action: unknown vertex: " + from);
        char& slot = hit[k.index_of(to)];
        if (slot) throw InputError("group action: generator is not injective");
        slot = 1;
    }
    // order-th power is the identity.
    for (const auto& name : k.vertex_names()) {
        std::string cur = name;
        for (int t = 0; t < action.order; ++t) cur = action.generator.at(cur);
        if (cur != name)
            throw InputError("group action: generator order does not divide the group order");
    }
    // Faces map to faces.
    for (const auto& f : k.maximal_faces())
        if (!k.has_face_names(image_face(k, action, f)))
            throw InputError("group action: generator is not simplicial");
}

EquivariantDelta build_quotient_Z(int p) {
    if (!is_odd_prime(p))
        throw InputError("build_quotient_Z: p must be an odd prime, got " +
                         std::to_string(p));

    // Cone P over the p-gon, minimally triangulated: apex c, boundary
    // vertices v_i; boundary edges a_i = (v_i, v_{i+1}) with ids 0..p-1,
    // radial edges r_i = (c, v_i) with ids p..2p-1; triangles
    // t_i = (c, v_i, v_{i+1}).
    std::vector<std::string> names{"c"};
    for (int i = 0; i < p; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::vector<std::vector<int>>> fm(3);
    for (int i = 0; i < p; ++i) fm[1].push_back({1 + (i + 1) % p, 1 + i});
    for (int i = 0; i < p; ++i) fm[1].push_back({1 + i, 0});
    for (int i = 0; i < p; ++i) fm[2].push_back({i, p + (i + 1) % p, p + i});
    const DeltaComplex cone_p = DeltaComplex::build(std::move(names), std::move(fm));

    DeltaAction rot;
    rot.order = p;
    rot.perm.resize(3);
    rot.perm[0].resize(1 + p);
    rot.perm[0][0] = 0;
    for (int i = 0; i < p; ++i) rot.perm[0][1 + i] = 1 + (i + 1) % p;
    rot.perm[1].resize(2 * p);
    for (int i = 0; i < p; ++i) {
        rot.perm[1][i] = (i + 1) % p;
        rot.perm[1][p + i] = p + (i + 1) % p;
    }
    rot.perm[2].resize(p);
    for (int i = 0; i < p; ++i) rot.perm[2][i] = (i + 1) % p;
    validate_action(cone_p, rot);

    // Identify the boundary subcomplex along the rotation orbits.
    std::vector<std::tuple<int, int, int>> ids;
    for (int i = 0; i < p; ++i) {
        ids.emplace_back(0, 1 + i, 1 + (i + 1) % p);
        ids.emplace_back(1, i, (i + 1) % p);
    }
    DeltaQuotient q = quotient(cone_p, ids);

    DeltaAction induced;
    induced.order = p;
    induced.perm.resize(3);
    for (int d = 0; d <= 2; ++d) {
        induced.perm[d].assign(q.complex.cell_count(d), -1);
        for (std::size_t c = 0; c < cone_p.cell_count(d); ++c) {
            const int from = q.cell_map[d][c];
            const int to = q.cell_map[d][rot.perm[d][c]];
            if (induced.perm[d][from] >= 0 && induced.perm[d][from] != to)
                throw BuildError("build_quotient_Z: identification does not respect the action");
            induced.perm[d][from] = to;
        }
    }
    validate_action(q.complex, induced);
    return EquivariantDelta{std::move(q.complex), std::move(induced)};
}

SimplicialComplex fixed_subcomplex(const EquivariantComplex& ec) {
    validate_action(ec.complex, ec.action);
    std::vector<std::string> fixed;
    for (const auto& [from, to] : ec.action.generator)
        if (from == to) fixed.push_back(from);
    return full_subcomplex(ec.complex, fixed);
}

bool action_is_regular(const EquivariantComplex& ec) {
    const auto& k = ec.complex;
    for (int d = 1; d <= k.dim(); ++d) {
        for (const auto& f : k.faces(d)) {
            const auto image = image_face(k, ec.action, f);
            if (image != k.face_names(f)) continue;
            for (int v : f)
                if (ec.action.generator.at(k.name_of(v)) != k.name_of(v)) return false;
        }
    }
    return true;
}

EquivariantComplex equivariant_subdivision(const EquivariantComplex& ec) {
    validate_action(ec.complex, ec.action);
    Subdivision sd = barycentric_subdivision(ec.complex);
    GroupAction action;
    action.order = ec.action.order;
    for (const auto& [name, face] : sd.provenance) {
        std::vector<std::string> image;
        image.reserve(face.size());
        for (const auto& v : face) image.push_back(ec.action.generator.at(v));
        std::sort(image.begin(), image.end());
        action.generator[name] = subdivision_vertex_name(image);
    }
    validate_action(sd.complex, action);
    return EquivariantComplex{std::move(sd.complex), std::move(action)};
}

BuildLResult build_L(int p, int subdivisions) {
    if (subdivisions < 1) throw InputError("build_L: subdivision count must be >= 1");
    EquivariantDelta z = build_quotient_Z(p);

    DeltaComplex dc = z.complex;
    DeltaAction da = z.action;
    std::optional<EquivariantComplex> simp;
    std::optional<EquivariantComplex> z_simplicial;
    int promoted_at = 0;
    std::string last_reason = "the quotient itself is not simplicial";

    for (int step = 1; step <= subdivisions; ++step) {
        if (!simp) {
            DeltaSubdivision sd = barycentric_subdivision(dc, "s" + std::to_string(step));
            da = transport_action(dc, da, sd);
            dc = std::move(sd.complex);
            std::string reason;
            if (dc.is_simplicial(&reason)) {
                promoted_at = step;
                SimplicialComplex cx = dc.promote();
                GroupAction ga;
                ga.order = da.order;
                for (std::size_t v = 0; v < dc.cell_count(0); ++v)
                    ga.generator[dc.vertex_name(static_cast<int>(v))] =
                        dc.vertex_name(da.perm[0][v]);
                validate_action(cx, ga);
                simp = EquivariantComplex{std::move(cx), std::move(ga)};
                z_simplicial = simp;
            } else {
                last_reason = reason;
            }
        } else {
            simp = equivariant_subdivision(*simp);
        }
        log_debug("build_L: step " + std::to_string(step) + (simp ? " (simplicial)" : " (delta)"));
    }

    if (!simp) {
        std::ostringstream s;
        s << "insufficient subdivision: not simplicial after " << subdivisions
          << " subdivisions (" << last_reason << ")";
        throw BuildError(s.str());
    }
    if (!is_flag(simp->complex)) {
        std::ostringstream s;
        s << "insufficient subdivision: not flag after " << subdivisions << " subdivisions";
        throw BuildError(s.str());
    }
    return BuildLResult{std::move(*simp), subdivisions, promoted_at,
                        std::move(*z_simplicial)};
}

EquivariantComplex build_L_flag_no_square(int p, int rings, int circle_length) {
    if (!is_odd_prime(p))
        throw InputError("build_L_flag_no_square: p must be an odd prime, got " +
                         std::to_string(p));
    if (rings < 3) throw InputError("build_L_flag_no_square: need at least 3 rings");
    if (circle_length < 5)
        throw InputError("build_L_flag_no_square: circle length must be >= 5");

    const int q = circle_length;
    const int n = p * q;  // interior ring size

    auto pad = [](int i) {
        std::ostringstream s;
        if (i < 100) s << (i < 10 ? "00" : "0");
        s << i;
        return s.str();
    };
    auto ring_vertex = [&](int j, int i) {
        return "r" + std::to_string(j) + "." + pad(((i % n) + n) % n);
    };
    auto circle_vertex = [&](int i) { return "w." + pad(((i % q) + q) % q); };

    std::vector<std::vector<std::string>> faces;
    // Apex fan onto ring 1.
    for (int i = 0; i < n; ++i)
        faces.push_back({"c", ring_vertex(1, i), ring_vertex(1, i + 1)});
    // Annular strips between interior rings, all diagonals in the same
    // rotational direction so the action stays simplicial.
    for (int j = 1; j + 1 <= rings - 1; ++j) {
        for (int i = 0; i < n; ++i) {
            faces.push_back({ring_vertex(j, i), ring_vertex(j, i + 1),
                             ring_vertex(j + 1, i + 1)});
            faces.push_back({ring_vertex(j, i), ring_vertex(j + 1, i),
                             ring_vertex(j + 1, i + 1)});
        }
    }
    // Last strip attaches p-to-1 onto the branch circle.
    for (int i = 0; i < n; ++i) {
        faces.push_back({ring_vertex(rings - 1, i), ring_vertex(rings - 1, i + 1),
                         circle_vertex(i + 1)});
        faces.push_back(
            {ring_vertex(rings - 1, i), circle_vertex(i), circle_vertex(i + 1)});
    }

    EquivariantComplex ec;
    ec.complex = SimplicialComplex::from_maximal_faces(faces);
    ec.action.order = p;
    ec.action.generator["c"] = "c";
    for (int j = 1; j <= rings - 1; ++j)
        for (int i = 0; i < n; ++i)
            ec.action.generator[ring_vertex(j, i)] = ring_vertex(j, i + q);
    for (int i = 0; i < q; ++i) ec.action.generator[circle_vertex(i)] = circle_vertex(i);
    validate_action(ec.complex, ec.action);
    return ec;
}

KSingPair build_K_sing(const SimplicialComplex& l, const SimplicialComplex& l_sing) {
    if (!l.contains_subcomplex(l_sing))
        throw InputError("build_K_sing: l_sing is not a subcomplex of l");

    Subdivision sd = barycentric_subdivision(l);
    const SimplicialComplex& l_prime = sd.complex;

    // L'_sing: barycenters of the faces of l_sing, as a full subcomplex of L'.
    std::vector<std::string> sing_vertices;
    for (const auto& [name, face] : sd.provenance)
        if (l_sing.has_face_names(face)) sing_vertices.push_back(name);
    const SimplicialComplex l_prime_sing = full_subcomplex(l_prime, sing_vertices);

    std::string apex = "apex";
    while (l_prime.index_of(apex) >= 0) apex += "'";

    KSingPair out;
    out.apex = apex;
    out.k = cone(l_prime, apex);
    out.k_sing = union_complexes(l_prime, cone(l_prime_sing, apex));
    return out;
}

GpReport verify_gp(int p, int subdivisions, LBuilder builder) {
    GpReport report;
    report.p = p;
    report.subdivisions = subdivisions;
    report.builder = builder;

    // The quotient Z is simplicialized independently of the chosen L
    // builder and serves as a cohomological cross-check.
    log_info("verify_gp: building L for p=" + std::to_string(p));
    EquivariantComplex l_ec;
    EquivariantComplex z_simplicial;
    if (builder == LBuilder::Barycentric) {
        BuildLResult bl = build_L(p, subdivisions);
        report.promoted_at = bl.promoted_at;
        l_ec = std::move(bl.l);
        z_simplicial = std::move(bl.z_simplicial);
    } else {
        l_ec = build_L_flag_no_square(p, std::max(3, subdivisions));
        EquivariantDelta z = build_quotient_Z(p);
        DeltaComplex dc = z.complex;
        DeltaAction da = z.action;
        int step = 0;
        while (!dc.is_simplicial()) {
            ++step;
            DeltaSubdivision sd = barycentric_subdivision(dc, "s" + std::to_string(step));
            da = transport_action(dc, da, sd);
            dc = std::move(sd.complex);
            if (step > 4) throw BuildError("verify_gp: quotient failed to simplicialize");
        }
        report.promoted_at = step;
        GroupAction ga;
        ga.order = da.order;
        for (std::size_t v = 0; v < dc.cell_count(0); ++v)
            ga.generator[dc.vertex_name(static_cast<int>(v))] =
                dc.vertex_name(da.perm[0][v]);
        z_simplicial = EquivariantComplex{dc.promote(), std::move(ga)};
    }

    const SimplicialComplex& L = l_ec.complex;
    report.l_vertices = L.vertex_count();
    report.l_faces = L.face_count();

    report.h1_Z = cohomology(z_simplicial.complex, 1);
    report.h2_Z = cohomology(z_simplicial.complex, 2);

    log_info("verify_gp: certificate scan over " + std::to_string(report.l_faces) +
             " complements");
    report.certificate = rigidity_certificate(L);
    report.h1_L = cohomology(L, 1);
    report.h2_L_reduced = cohomology(L, 2, true);

    report.checks.action_regular = action_is_regular(l_ec);
    const SimplicialComplex l_sing = fixed_subcomplex(l_ec);
    report.h0_L_sing = cohomology(l_sing, 0);
    report.h1_L_sing = cohomology(l_sing, 1);

    log_info("verify_gp: building K and K_sing");
    KSingPair pair = build_K_sing(L, l_sing);
    report.k_sing_vertices = pair.k_sing.vertex_count();
    report.h2_K_sing = cohomology(pair.k_sing, 2);
    report.relative_h3 = relative_cohomology(pair.k, pair.k_sing, 3);

    const FgAbelianGroup z_p = cyclic(p);
    const RacgCertificate& cert = report.certificate;
    GpChecks& checks = report.checks;
    checks.graph_conditions = cert.hyperbolic && cert.one_ended &&
                              cert.no_dominating_vertex &&
                              cert.star_complements_connected && cert.maximal_cover &&
                              cert.flag;
    checks.h2_L_is_Z_p = report.h2_L_reduced == z_p;
    checks.vcd_is_3 = cert.vcd == 3;
    checks.group_ring_is_Z_p = cert.top_group_ring_cohomology.hypothesis_holds &&
                               cert.top_group_ring_cohomology.value == z_p;
    checks.h1_Z_zero = report.h1_Z.is_trivial();
    checks.h2_Z_is_Z_p = report.h2_Z == z_p;
    checks.h1_L_zero = report.h1_L.is_trivial();
    checks.h2_L_matches_Z = report.h2_L_reduced == report.h2_Z;
    checks.l_sing_is_circle_and_point =
        report.h0_L_sing == free_abelian(2) && report.h1_L_sing == free_abelian(1);
    checks.k_sing_rank_at_least_1 = report.h2_K_sing.rank >= 1;
    checks.relative_matches_h2_k_sing = report.relative_h3 == report.h2_K_sing;
    checks.mayer_vietoris_rank_bound =
        report.h2_K_sing.rank >= report.h1_L_sing.rank - report.h1_L.rank;

    report.verdict = checks.all() && cert.dimension_rigid;
    return report;
}

}  // namespace coxdim
