#include "coxdim/racg.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace coxdim {

namespace {

// All nonempty faces in canonical order (dimension, then lexicographic).
std::vector<VertexList> all_faces(const SimplicialComplex& k) {
    std::vector<VertexList> out;
    for (int d = 0; d <= k.dim(); ++d) {
        const auto& fs = k.faces(d);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

bool complement_connected(const SimplicialComplex& k, const VertexList& sigma) {
    return connected_components(complement_complex(k, sigma)).size() == 1;
}

// Highest degree with nonzero reduced cohomology; -1 counts the reduced
// (-1)-cohomology of the empty complex, -2 means everything vanishes.
int top_nonvanishing_degree(const SimplicialComplex& k) {
    for (int n = k.dim(); n >= -1; --n)
        if (!cohomology(k, n, true).is_trivial()) return n;
    return -2;
}

}  // namespace

bool check_hyperbolic(const Graph& g) {
    // No induced 4-cycle: for every non-adjacent pair, the common
    // neighbourhood contains no non-adjacent pair.
    const auto adj = g.adjacency();
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            if (g.adjacent(u, w)) continue;
            std::vector<int> common;
            for (int x : adj[u])
                if (g.adjacent(x, w)) common.push_back(x);
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j)
                    if (!g.adjacent(common[i], common[j])) return false;
        }
    }
    return true;
}

bool check_one_ended(const SimplicialComplex& l) {
    if (!is_flag(l)) throw InputError("check_one_ended: input complex is not flag");
    if (connected_components(l).size() != 1) return false;
    const auto faces = all_faces(l);
    std::atomic<bool> ok{true};
    parallel_for(faces.size(), [&](std::size_t i) {
        if (!ok.load(std::memory_order_relaxed)) return;
        if (!complement_connected(l, faces[i])) ok.store(false, std::memory_order_relaxed);
    });
    return ok.load();
}

bool check_no_dominating_vertex(const Graph& g) {
    const auto adj = g.adjacency();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(adj[v].size()) == g.vertex_count() - 1) return false;
    return true;
}

bool check_star_complements(const Graph& g) {
    const auto adj = g.adjacency();
    const int n = g.vertex_count();
    for (int s = 0; s < n; ++s) {
        std::vector<char> removed(n, 0);
        removed[s] = 1;
        for (int t : adj[s]) removed[t] = 1;
        // Connectivity of the induced graph on the remaining vertices.
        int start = -1, remaining = 0;
        for (int v = 0; v < n; ++v)
            if (!removed[v]) {
                if (start < 0) start = v;
                ++remaining;
            }
        if (remaining == 0) return false;
        std::vector<int> stack{start};
        std::vector<char> seen(n, 0);
        seen[start] = 1;
        int visited = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!removed[w] && !seen[w]) {
                    seen[w] = 1;
                    ++visited;
                    stack.push_back(w);
                }
        }
        if (visited != remaining) return false;
    }
    return true;
}

bool check_maximal_cover(const SimplicialComplex& l) {
    for (int d = 0; d <= l.dim(); ++d) {
        for (const auto& f : l.faces(d)) {
            int cover = 0;
            bool is_maximal = false;
            for (const auto& m : l.maximal_faces()) {
                if (m == f) {
                    is_maximal = true;
                    break;
                }
                if (m.size() > f.size() &&
                    std::includes(m.begin(), m.end(), f.begin(), f.end()))
                    ++cover;
            }
            if (!is_maximal && cover < 2) return false;
        }
    }
    return true;
}

int vcd_davis(const SimplicialComplex& l, std::size_t scan_limit) {
    const int d = l.dim();
    const FgAbelianGroup top = cohomology(l, d, true);
    if (d >= 0 && !top.is_trivial()) return d + 1;

    const auto faces = all_faces(l);
    if (faces.size() > scan_limit) {
        std::ostringstream s;
        s << "vcd_davis: complement scan over " << faces.size()
          << " simplices exceeds the limit of " << scan_limit;
        throw InputError(s.str());
    }
    // sigma = empty simplex contributes the complex itself.
    std::vector<int> best(faces.size() + 1, -2);
    best[0] = top_nonvanishing_degree(l);
    parallel_for(faces.size(), [&](std::size_t i) {
        best[i + 1] = top_nonvanishing_degree(complement_complex(l, faces[i]));
    });
    int vcd = 0;
    for (int b : best)
        if (b > -2) vcd = std::max(vcd, b + 1);
    return vcd;
}

GroupRingTop top_group_ring_cohomology(const SimplicialComplex& l) {
    const int d = l.dim();
    const auto faces = all_faces(l);
    std::atomic<bool> vanishes{true};
    parallel_for(faces.size(), [&](std::size_t i) {
        if (!vanishes.load(std::memory_order_relaxed)) return;
        if (!cohomology(complement_complex(l, faces[i]), d, true).is_trivial())
            vanishes.store(false, std::memory_order_relaxed);
    });
    GroupRingTop out;
    out.hypothesis_holds = vanishes.load();
    if (out.hypothesis_holds) out.value = cohomology(l, d, true);
    return out;
}

RacgCertificate rigidity_certificate(const SimplicialComplex& l) {
    if (!is_flag(l)) throw InputError("rigidity_certificate: input complex is not flag");

    RacgCertificate cert;
    cert.flag = true;
    cert.dimension = l.dim();
    const Graph g = one_skeleton(l);
    cert.hyperbolic = check_hyperbolic(g);
    cert.no_dominating_vertex = check_no_dominating_vertex(g);
    cert.star_complements_connected = check_star_complements(g);
    cert.maximal_cover = check_maximal_cover(l);
    cert.connected = connected_components(l).size() == 1;
    cert.top_reduced_cohomology = cohomology(l, l.dim(), true);

    // One shared pass over the complements: connectivity feeds the
    // one-endedness check, the top reduced cohomology feeds the group-ring
    // hypothesis.
    const auto faces = all_faces(l);
    const int d = l.dim();
    std::vector<char> conn(faces.size(), 0);
    std::vector<char> top_zero(faces.size(), 0);
    parallel_for(faces.size(), [&](std::size_t i) {
        const SimplicialComplex comp = complement_complex(l, faces[i]);
        conn[i] = connected_components(comp).size() == 1 ? 1 : 0;
        top_zero[i] = cohomology(comp, d, true).is_trivial() ? 1 : 0;
    });
    cert.one_ended = cert.connected &&
                     std::all_of(conn.begin(), conn.end(), [](char c) { return c != 0; });
    cert.top_group_ring_cohomology.hypothesis_holds =
        std::all_of(top_zero.begin(), top_zero.end(), [](char c) { return c != 0; });
    if (cert.top_group_ring_cohomology.hypothesis_holds)
        cert.top_group_ring_cohomology.value = cert.top_reduced_cohomology;

    if (d >= 0 && !cert.top_reduced_cohomology.is_trivial()) {
        cert.vcd = d + 1;
    } else {
        cert.vcd = vcd_davis(l);
    }

    cert.dimension_rigid = cert.no_dominating_vertex && cert.star_complements_connected &&
                           cert.maximal_cover && cert.connected &&
                           !cert.top_reduced_cohomology.is_trivial();
    return cert;
}

}  // namespace coxdim
