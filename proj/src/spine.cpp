#include "coxdim/spine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace coxdim {

namespace {

// Working representation during generation: label[v] >= 0 is a special
// index, -1 is a trivial vertex.
struct RawTree {
    std::vector<int> label;
    std::vector<std::pair<int, int>> edges;
};

std::vector<std::vector<int>> adjacency(const RawTree& t) {
    std::vector<std::vector<int>> adj(t.label.size());
    for (const auto& [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> degree(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        if (degree[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int w : adj[v])
                if (--degree[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string vertex_tag(int label) {
    return label >= 0 ? "S" + std::to_string(label) : "T";
}

std::string rooted_code(const RawTree& t, const std::vector<std::vector<int>>& adj,
                        int v, int parent) {
    std::vector<std::string> children;
    for (int w : adj[v])
        if (w != parent) children.push_back(rooted_code(t, adj, w, v));
    std::sort(children.begin(), children.end());
    std::string out = "(" + vertex_tag(t.label[v]);
    for (const auto& c : children) out += c;
    out += ")";
    return out;
}

std::string raw_canonical_code(const RawTree& t) {
    const auto adj = adjacency(t);
    const auto centers = tree_centers(adj);
    if (centers.size() == 1) return rooted_code(t, adj, centers[0], -1);
    const std::string a = rooted_code(t, adj, centers[0], centers[1]);
    const std::string b = rooted_code(t, adj, centers[1], centers[0]);
    return a <= b ? "[" + a + b + "]" : "[" + b + a + "]";
}

RawTree to_raw(const QuotientTree& t) {
    RawTree raw;
    raw.label.assign(t.vertex_count(), -1);
    for (int s = 0; s < t.special_count; ++s) raw.label[s] = s;
    raw.edges = t.edges;
    return raw;
}

// Deterministic renumbering into the public layout: specials by label,
// trivials in depth-first discovery order from special 0.
QuotientTree to_quotient_tree(const RawTree& t) {
    const int n = static_cast<int>(t.label.size());
    int r = 0;
    for (int lbl : t.label) r = std::max(r, lbl + 1);
    std::vector<int> remap(n, -1);
    for (int v = 0; v < n; ++v)
        if (t.label[v] >= 0) remap[v] = t.label[v];

    auto adj = adjacency(t);
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    int start = 0;
    while (t.label[start] != 0) ++start;
    int next_trivial = r;
    std::vector<int> stack{start};
    std::vector<char> seen(n, 0);
    seen[start] = 1;
    std::vector<int> order;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it)
            if (!seen[*it]) {
                seen[*it] = 1;
                stack.push_back(*it);
            }
    }
    for (int v : order)
        if (t.label[v] < 0) remap[v] = next_trivial++;

    QuotientTree out;
    out.special_count = r;
    out.trivial_count = n - r;
    for (const auto& [a, b] : t.edges) {
        const int x = remap[a], y = remap[b];
        out.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

// One generation level: all valid trees on `labels` special labels obtained
// from a valid tree on labels-1 by attaching or placing the new label.
std::vector<RawTree> expand(const RawTree& t, int new_label) {
    std::vector<RawTree> out;
    const int n = static_cast<int>(t.label.size());

    // A: new special leaf attached to any vertex.
    for (int v = 0; v < n; ++v) {
        RawTree next = t;
        next.label.push_back(new_label);
        next.edges.emplace_back(v, n);
        out.push_back(std::move(next));
    }
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        const auto [a, b] = t.edges[e];
        // B: subdivide an edge with a fresh trivial vertex carrying the new
        // special as a leaf (the trivial vertex gets degree 3).
        {
            RawTree next = t;
            next.edges.erase(next.edges.begin() + static_cast<long>(e));
            next.label.push_back(-1);
            next.label.push_back(new_label);
            next.edges.emplace_back(a, n);
            next.edges.emplace_back(n, b);
            next.edges.emplace_back(n, n + 1);
            out.push_back(std::move(next));
        }
        // C: subdivide an edge with the new special (degree 2).
        {
            RawTree next = t;
            next.edges.erase(next.edges.begin() + static_cast<long>(e));
            next.label.push_back(new_label);
            next.edges.emplace_back(a, n);
            next.edges.emplace_back(n, b);
            out.push_back(std::move(next));
        }
    }
    // D: promote a trivial vertex to the new special.
    for (int v = 0; v < n; ++v) {
        if (t.label[v] < 0) {
            RawTree next = t;
            next.label[v] = new_label;
            out.push_back(std::move(next));
        }
    }
    return out;
}

// Removing the newest label from a valid tree is deterministic and recovers
// the generating class, so trees produced by distinct parent classes are
// never isomorphic.  Deduplication therefore only needs to happen within a
// single parent's expansion.
void enumerate_raw(int r, const std::function<void(const RawTree&)>& visit) {
    if (r < 2) throw InputError("enumerate_trees: need at least 2 factors");
    std::vector<RawTree> level{RawTree{{0}, {}}};
    for (int lbl = 1; lbl < r; ++lbl) {
        const bool last = lbl == r - 1;
        std::vector<RawTree> next;
        for (const RawTree& t : level) {
            std::map<std::string, RawTree> local;
            for (RawTree& cand : expand(t, lbl))
                local.emplace(raw_canonical_code(cand), std::move(cand));
            for (auto& [code, cand] : local) {
                if (last)
                    visit(cand);
                else
                    next.push_back(std::move(cand));
            }
        }
        level = std::move(next);
    }
}

}  // namespace

std::vector<int> QuotientTree::degrees() const {
    std::vector<int> deg(vertex_count(), 0);
    for (const auto& [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

void validate_tree(const QuotientTree& t) {
    const int n = t.vertex_count();
    if (t.special_count < 1) throw InputError("quotient tree: no special vertices");
    if (static_cast<int>(t.edges.size()) != n - 1)
        throw InputError("quotient tree: edge count does not match a tree");
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : t.edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw InputError("quotient tree: bad edge");
        const int ra = find(a), rb = find(b);
        if (ra == rb) throw InputError("quotient tree: cycle detected");
        parent[ra] = rb;
    }
    const auto deg = t.degrees();
    for (int v = t.special_count; v < n; ++v)
        if (deg[v] < 3) throw InputError("quotient tree: trivial vertex of degree < 3");
}

std::string canonical_code(const QuotientTree& t) {
    validate_tree(t);
    return raw_canonical_code(to_raw(t));
}

std::vector<QuotientTree> enumerate_trees(int r) {
    std::vector<std::pair<std::string, QuotientTree>> keyed;
    enumerate_trees(r, [&](const QuotientTree& t) {
        keyed.emplace_back(canonical_code(t), t);
    });
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<QuotientTree> out;
    out.reserve(keyed.size());
    for (auto& [code, t] : keyed) out.push_back(std::move(t));
    return out;
}

void enumerate_trees(int r, const std::function<void(const QuotientTree&)>& visit) {
    enumerate_raw(r, [&](const RawTree& raw) {
        QuotientTree t = to_quotient_tree(raw);
        validate_tree(t);
        visit(t);
    });
}

SpineCellBound cell_bound(const QuotientTree& t) {
    validate_tree(t);
    const int r = t.special_count;
    SpineCellBound out;
    const auto deg = t.degrees();
    out.degree_vector.assign(deg.begin(), deg.begin() + r);
    out.edge_count = static_cast<int>(t.edges.size());

    // Forest induced on the trivial vertices.
    const int m = t.trivial_count;
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : t.edges) {
        if (a >= r && b >= r) {
            ++out.forest_edges;
            parent[find(a - r)] = find(b - r);
        }
    }
    std::set<int> roots;
    for (int v = 0; v < m; ++v) roots.insert(find(v));
    out.forest_components = static_cast<int>(roots.size());

    if (out.edge_count != out.forest_edges + out.forest_components + r - 1)
        throw std::logic_error("cell_bound: tree contraction identity violated");
    out.max_cell_dim = out.edge_count - r + 1;
    return out;
}

StabBoundReport verify_stab_bound(int r) {
    StabBoundReport report;
    report.r = r;
    enumerate_trees(r, [&](const QuotientTree& t) {
        ++report.tree_count;
        const SpineCellBound bound = cell_bound(t);
        const int total_degree =
            std::accumulate(bound.degree_vector.begin(), bound.degree_vector.end(), 0);
        const int lhs = total_degree + bound.max_cell_dim;
        if (lhs > 2 * r - 2)
            report.violations.push_back(canonical_code(t));
        else if (lhs == 2 * r - 2)
            ++report.equality_count;
    });
    return report;
}

StabilizerShape stabilizer_shape(const QuotientTree& t,
                                 const std::vector<FactorProfile>& profiles) {
    validate_tree(t);
    if (static_cast<int>(profiles.size()) != t.special_count)
        throw InputError("stabilizer_shape: profile count does not match the factor count");
    const SpineCellBound bound = cell_bound(t);
    std::vector<FactorProfile> scaled = profiles;
    for (int i = 0; i < t.special_count; ++i)
        scaled[i].multiplicity *= bound.degree_vector[i];
    const ProductReport report = product_dimension_report(scaled);
    StabilizerShape shape;
    shape.degree_vector = bound.degree_vector;
    shape.vcd_upper = report.vcd_upper;
    shape.bredon_cd = report.bredon_cd;
    shape.regime = report.regime;
    return shape;
}

std::vector<FactorProfile> default_profiles(int r) {
    std::vector<FactorProfile> profiles;
    int candidate = 3;
    auto is_prime = [](int n) {
        for (int d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    };
    while (static_cast<int>(profiles.size()) < r) {
        if (is_prime(candidate))
            profiles.push_back(FactorProfile{3, cyclic(candidate), 1});
        candidate += 2;
    }
    return profiles;
}

OutBounds out_dimension_bounds(int r) { return out_dimension_bounds(r, default_profiles(r)); }

OutBounds out_dimension_bounds(int r, const std::vector<FactorProfile>& profiles) {
    if (static_cast<int>(profiles.size()) != r)
        throw InputError("out_dimension_bounds: profile count does not match r");
    OutBounds out;
    out.r = r;
    // Stabilizer bounds only depend on the degree vector; cache them since
    // many trees share one.
    std::map<std::vector<int>, std::pair<int, int>> cache;
    enumerate_trees(r, [&](const QuotientTree& t) {
        ++out.tree_count;
        const SpineCellBound bound = cell_bound(t);
        auto it = cache.find(bound.degree_vector);
        if (it == cache.end()) {
            const StabilizerShape shape = stabilizer_shape(t, profiles);
            it = cache.emplace(bound.degree_vector,
                               std::make_pair(shape.vcd_upper, shape.bredon_cd))
                     .first;
        }
        out.vcd_upper = std::max(out.vcd_upper, it->second.first + bound.max_cell_dim);
        out.bredon_cd_lower = std::max(out.bredon_cd_lower, it->second.second);
    });
    out.gap = out.bredon_cd_lower - out.vcd_upper;
    return out;
}

AutBounds aut_dimension_bounds(int factors) {
    if (factors < 2) throw InputError("aut_dimension_bounds: need at least 2 factors");
    AutBounds out;
    out.factors = factors;
    out.vcd_upper = 3 + (5 * factors - 5);
    out.cd_lower = 6 * factors - 6;
    return out;
}

}  // namespace coxdim
