#include "coxdim/simplicial.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace coxdim {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

// Disjoint-set union on [0, n).
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<std::string>> components_from_edges(
    const std::vector<std::string>& names, const std::vector<std::pair<int, int>>& edges) {
    const int n = static_cast<int>(names.size());
    UnionFind uf(n);
    for (const auto& [a, b] : edges) uf.unite(a, b);
    std::map<int, std::vector<std::string>> groups;
    for (int v = 0; v < n; ++v) groups[uf.find(v)].push_back(names[v]);
    std::vector<std::vector<std::string>> out;
    out.reserve(groups.size());
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

// Removes duplicates and faces contained in another face.
std::vector<VertexList> prune_to_maximal(std::vector<VertexList> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    if (faces.empty()) return faces;

    int max_vertex = 0;
    for (const auto& f : faces)
        for (int v : f) max_vertex = std::max(max_vertex, v);

    // Inverted index: vertex -> face ids, used to restrict the superset search.
    std::vector<std::vector<int>> by_vertex(max_vertex + 1);
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        for (int v : faces[i]) by_vertex[v].push_back(i);

    std::vector<char> dominated(faces.size(), 0);
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        const VertexList& f = faces[i];
        if (f.empty()) {
            dominated[i] = 1;  // the empty simplex is implicit
            continue;
        }
        int pick = f[0];
        for (int v : f)
            if (by_vertex[v].size() < by_vertex[pick].size()) pick = v;
        for (int j : by_vertex[pick]) {
            if (j == i || dominated[j]) continue;
            if (faces[j].size() < f.size()) continue;
            if (faces[j].size() == f.size() && j > i) continue;  // dedup kept i == j only
            if (faces[j] != f && std::includes(faces[j].begin(), faces[j].end(),
                                               f.begin(), f.end())) {
                dominated[i] = 1;
                break;
            }
        }
    }
    std::vector<VertexList> out;
    out.reserve(faces.size());
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (!dominated[i]) out.push_back(std::move(faces[i]));
    return out;
}

void enumerate_subsets(const VertexList& face, int k, std::size_t start, VertexList& cur,
                       std::vector<VertexList>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < face.size(); ++i) {
        cur.push_back(face[i]);
        enumerate_subsets(face, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph

Graph Graph::from_names(const std::vector<std::string>& vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    g.vertices_ = sorted_unique(vertices);
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        const int ia = g.index_of(a);
        const int ib = g.index_of(b);
        if (ia < 0 || ib < 0)
            throw InputError("graph edge endpoint is not a declared vertex: " +
                             (ia < 0 ? a : b));
        if (ia == ib) throw InputError("graph has a loop at vertex: " + a);
        seen.insert({std::min(ia, ib), std::max(ia, ib)});
    }
    g.edges_.assign(seen.begin(), seen.end());
    return g;
}

int Graph::index_of(const std::string& name) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end() || *it != name) return -1;
    return static_cast<int>(it - vertices_.begin());
}

bool Graph::adjacent(int u, int v) const {
    if (u == v) return false;
    const std::pair<int, int> e{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(vertices_.size());
    for (const auto& [a, b] : edges_) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex SimplicialComplex::from_maximal_faces(
    const std::vector<std::vector<std::string>>& faces) {
    SimplicialComplex k;
    std::vector<std::string> names;
    for (const auto& f : faces) names.insert(names.end(), f.begin(), f.end());
    k.vertices_ = sorted_unique(std::move(names));

    std::vector<VertexList> indexed;
    indexed.reserve(faces.size());
    for (const auto& f : faces) {
        VertexList face;
        face.reserve(f.size());
        for (const auto& name : f) face.push_back(k.index_of(name));
        std::sort(face.begin(), face.end());
        if (std::adjacent_find(face.begin(), face.end()) != face.end())
            throw InputError("face has a repeated vertex");
        if (!face.empty()) indexed.push_back(std::move(face));
    }
    k.maximal_faces_ = prune_to_maximal(std::move(indexed));
    return k;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : maximal_faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

const std::vector<VertexList>& SimplicialComplex::faces(int d) const {
    static const std::vector<VertexList> empty;
    if (d < 0 || d > dim()) return empty;
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->by_dim.find(d);
        if (it != cache_->by_dim.end()) return it->second;
    }
    std::vector<VertexList> all;
    VertexList cur;
    for (const auto& f : maximal_faces_) {
        if (static_cast<int>(f.size()) >= d + 1) enumerate_subsets(f, d + 1, 0, cur, all);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->by_dim.emplace(d, std::move(all)).first->second;
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t total = 0;
    for (int d = 0; d <= dim(); ++d) total += faces(d).size();
    return total;
}

bool SimplicialComplex::has_face(const VertexList& f) const {
    if (f.empty()) return true;
    return face_index(f) >= 0;
}

bool SimplicialComplex::has_face_names(const std::vector<std::string>& names) const {
    VertexList f;
    f.reserve(names.size());
    for (const auto& name : names) {
        const int v = index_of(name);
        if (v < 0) return false;
        f.push_back(v);
    }
    std::sort(f.begin(), f.end());
    return has_face(f);
}

int SimplicialComplex::face_index(const VertexList& f) const {
    const auto& list = faces(static_cast<int>(f.size()) - 1);
    auto it = std::lower_bound(list.begin(), list.end(), f);
    if (it == list.end() || *it != f) return -1;
    return static_cast<int>(it - list.begin());
}

int SimplicialComplex::index_of(const std::string& name) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end() || *it != name) return -1;
    return static_cast<int>(it - vertices_.begin());
}

std::vector<std::string> SimplicialComplex::face_names(const VertexList& f) const {
    std::vector<std::string> out;
    out.reserve(f.size());
    for (int v : f) out.push_back(vertices_[v]);
    return out;
}

bool SimplicialComplex::contains_subcomplex(const SimplicialComplex& other) const {
    for (const auto& f : other.maximal_faces())
        if (!has_face_names(other.face_names(f))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Operations

Graph one_skeleton(const SimplicialComplex& k) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : k.faces(1))
        edges.emplace_back(k.name_of(e[0]), k.name_of(e[1]));
    return Graph::from_names(k.vertex_names(), edges);
}

SimplicialComplex flag_complex(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<boost::dynamic_bitset<>> adj(n, boost::dynamic_bitset<>(n));
    for (const auto& [a, b] : g.edges()) {
        adj[a].set(b);
        adj[b].set(a);
    }

    std::vector<std::vector<std::string>> cliques;
    // Bron-Kerbosch with pivoting.
    std::function<void(boost::dynamic_bitset<>, boost::dynamic_bitset<>,
                       boost::dynamic_bitset<>)>
        expand = [&](boost::dynamic_bitset<> r, boost::dynamic_bitset<> p,
                     boost::dynamic_bitset<> x) {
            if (p.none() && x.none()) {
                std::vector<std::string> clique;
                for (std::size_t v = r.find_first(); v != boost::dynamic_bitset<>::npos;
                     v = r.find_next(v))
                    clique.push_back(g.vertex_names()[v]);
                cliques.push_back(std::move(clique));
                return;
            }
            // Pivot: vertex of P|X with most neighbours in P.
            boost::dynamic_bitset<> px = p | x;
            std::size_t pivot = boost::dynamic_bitset<>::npos;
            std::size_t best = 0;
            for (std::size_t v = px.find_first(); v != boost::dynamic_bitset<>::npos;
                 v = px.find_next(v)) {
                const std::size_t deg = (p & adj[v]).count();
                if (pivot == boost::dynamic_bitset<>::npos || deg > best) {
                    pivot = v;
                    best = deg;
                }
            }
            boost::dynamic_bitset<> candidates = p & ~adj[pivot];
            for (std::size_t v = candidates.find_first();
                 v != boost::dynamic_bitset<>::npos; v = candidates.find_next(v)) {
                boost::dynamic_bitset<> rv = r;
                rv.set(v);
                expand(rv, p & adj[v], x & adj[v]);
                p.reset(v);
                x.set(v);
            }
        };

    if (n > 0) {
        boost::dynamic_bitset<> r(n), p(n), x(n);
        p.set();
        expand(r, p, x);
    }
    return SimplicialComplex::from_maximal_faces(cliques);
}

bool is_flag(const SimplicialComplex& k) { return flag_complex(one_skeleton(k)) == k; }

SimplicialComplex full_subcomplex(const SimplicialComplex& k,
                                  const std::vector<std::string>& w) {
    std::vector<char> keep(k.vertex_count(), 0);
    for (const auto& name : w) {
        const int v = k.index_of(name);
        if (v < 0) throw InputError("full_subcomplex: unknown vertex: " + name);
        keep[v] = 1;
    }
    std::vector<std::vector<std::string>> faces;
    for (const auto& f : k.maximal_faces()) {
        std::vector<std::string> names;
        for (int v : f)
            if (keep[v]) names.push_back(k.name_of(v));
        if (!names.empty()) faces.push_back(std::move(names));
    }
    return SimplicialComplex::from_maximal_faces(faces);
}

SimplicialComplex complement_complex(const SimplicialComplex& k, const VertexList& sigma) {
    std::vector<char> drop(k.vertex_count(), 0);
    for (int v : sigma) drop[v] = 1;
    std::vector<std::string> w;
    for (int v = 0; v < k.vertex_count(); ++v)
        if (!drop[v]) w.push_back(k.name_of(v));
    return full_subcomplex(k, w);
}

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex) {
    if (k.index_of(apex) >= 0)
        throw InputError("cone: apex collides with an existing vertex: " + apex);
    std::vector<std::vector<std::string>> faces;
    if (k.maximal_faces().empty()) {
        faces.push_back({apex});
    } else {
        for (const auto& f : k.maximal_faces()) {
            auto names = k.face_names(f);
            names.push_back(apex);
            faces.push_back(std::move(names));
        }
    }
    return SimplicialComplex::from_maximal_faces(faces);
}

SimplicialComplex union_complexes(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::vector<std::string>> faces;
    for (const auto& f : a.maximal_faces()) faces.push_back(a.face_names(f));
    for (const auto& f : b.maximal_faces()) faces.push_back(b.face_names(f));
    // Isolated vertices survive the union even if they are faces of neither list.
    for (const auto& name : a.vertex_names()) faces.push_back({name});
    for (const auto& name : b.vertex_names()) faces.push_back({name});
    return SimplicialComplex::from_maximal_faces(faces);
}

std::vector<std::vector<std::string>> connected_components(const SimplicialComplex& k) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : k.faces(1)) edges.emplace_back(e[0], e[1]);
    return components_from_edges(k.vertex_names(), edges);
}

std::vector<std::vector<std::string>> connected_components(const Graph& g) {
    return components_from_edges(g.vertex_names(), g.edges());
}

std::string subdivision_vertex_name(const std::vector<std::string>& face) {
    if (face.size() == 1) return face.front();
    std::ostringstream out;
    out << "b(";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i) out << "|";
        out << face[i];
    }
    out << ")";
    return out.str();
}

Subdivision barycentric_subdivision(const SimplicialComplex& k) {
    Subdivision sd;

    for (int d = 0; d <= k.dim(); ++d) {
        for (const auto& f : k.faces(d)) {
            auto names = k.face_names(f);
            const std::string v = subdivision_vertex_name(names);
            if (!sd.provenance.emplace(v, std::move(names)).second)
                throw InputError(
                    "barycentric_subdivision: vertex names collide with the "
                    "subdivision naming scheme");
        }
    }

    // Maximal simplices of sd(k) are the full flags of the maximal faces.
    std::vector<std::vector<std::string>> chains;
    for (const auto& f : k.maximal_faces()) {
        VertexList order(f);
        std::sort(order.begin(), order.end());
        do {
            std::vector<std::string> chain;
            std::vector<std::string> prefix;
            for (int v : order) {
                prefix.push_back(k.name_of(v));
                std::sort(prefix.begin(), prefix.end());
                chain.push_back(subdivision_vertex_name(prefix));
            }
            chains.push_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    sd.complex = SimplicialComplex::from_maximal_faces(chains);
    return sd;
}

}  // namespace coxdim
