#include "coxdim/delta.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace coxdim {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        // Keep the smaller id as representative for deterministic output.
        if (a < b)
            parent[b] = a;
        else
            parent[a] = b;
        return true;
    }
};

}  // namespace

DeltaComplex DeltaComplex::build(std::vector<std::string> vertex_names,
                                 std::vector<std::vector<std::vector<int>>> face_maps) {
    DeltaComplex x;
    x.vertex_names_ = std::move(vertex_names);
    x.face_maps_ = std::move(face_maps);
    {
        std::set<std::string> seen(x.vertex_names_.begin(), x.vertex_names_.end());
        if (seen.size() != x.vertex_names_.size())
            throw InputError("DeltaComplex: duplicate vertex names");
    }
    x.validate();
    return x;
}

int DeltaComplex::dim() const {
    int d = vertex_names_.empty() ? -1 : 0;
    for (int k = 1; k < static_cast<int>(face_maps_.size()); ++k)
        if (!face_maps_[k].empty()) d = k;
    return d;
}

std::size_t DeltaComplex::cell_count(int d) const {
    if (d == 0) return vertex_names_.size();
    if (d < 0 || d >= static_cast<int>(face_maps_.size())) return 0;
    return face_maps_[d].size();
}

int DeltaComplex::face(int d, int cell, int i) const {
    return face_maps_[d][cell][i];
}

void DeltaComplex::validate() const {
    for (int d = 1; d < static_cast<int>(face_maps_.size()); ++d) {
        for (std::size_t c = 0; c < face_maps_[d].size(); ++c) {
            const auto& fm = face_maps_[d][c];
            if (static_cast<int>(fm.size()) != d + 1)
                throw InputError("DeltaComplex: a cell has the wrong number of faces");
            for (int id : fm)
                if (id < 0 || id >= static_cast<int>(cell_count(d - 1)))
                    throw InputError("DeltaComplex: face id out of range");
            // d_i d_j = d_{j-1} d_i for i < j
            if (d >= 2) {
                for (int j = 1; j <= d; ++j)
                    for (int i = 0; i < j; ++i)
                        if (face(d - 1, fm[j], i) != face(d - 1, fm[i], j - 1))
                            throw InputError(
                                "DeltaComplex: simplicial identities violated");
            }
        }
    }
}

std::vector<int> DeltaComplex::cell_vertices(int d, int cell) const {
    std::vector<int> out(d + 1);
    for (int j = 0; j <= d; ++j) {
        int cd = d, cc = cell;
        for (int m = d; m > j; --m) {
            cc = face(cd, cc, m);
            --cd;
        }
        for (int m = 0; m < j; ++m) {
            cc = face(cd, cc, 0);
            --cd;
        }
        out[j] = cc;
    }
    return out;
}

std::pair<int, int> DeltaComplex::restrict_cell(int d, int cell,
                                                const std::vector<int>& positions) const {
    std::vector<char> keep(d + 1, 0);
    for (int p : positions) keep[p] = 1;
    int cd = d, cc = cell;
    for (int p = d; p >= 0; --p) {
        if (!keep[p]) {
            cc = face(cd, cc, p);
            --cd;
        }
    }
    return {cd, cc};
}

bool DeltaComplex::is_simplicial(std::string* reason) const {
    for (int d = 1; d <= dim(); ++d) {
        std::map<std::vector<int>, int> seen;
        for (int c = 0; c < static_cast<int>(cell_count(d)); ++c) {
            std::vector<int> vs = cell_vertices(d, c);
            std::sort(vs.begin(), vs.end());
            if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
                if (reason) {
                    std::ostringstream s;
                    s << "cell " << c << " of dimension " << d << " has a repeated vertex";
                    *reason = s.str();
                }
                return false;
            }
            auto [it, inserted] = seen.emplace(std::move(vs), c);
            if (!inserted) {
                if (reason) {
                    std::ostringstream s;
                    s << "cells " << it->second << " and " << c << " of dimension " << d
                      << " share a vertex set";
                    *reason = s.str();
                }
                return false;
            }
        }
    }
    return true;
}

SimplicialComplex DeltaComplex::promote() const {
    std::string reason;
    if (!is_simplicial(&reason))
        throw BuildError("delta complex is not simplicial: " + reason);
    std::vector<std::vector<std::string>> faces;
    for (const auto& name : vertex_names_) faces.push_back({name});
    for (int d = 1; d <= dim(); ++d) {
        for (int c = 0; c < static_cast<int>(cell_count(d)); ++c) {
            std::vector<std::string> names;
            for (int v : cell_vertices(d, c)) names.push_back(vertex_names_[v]);
            faces.push_back(std::move(names));
        }
    }
    return SimplicialComplex::from_maximal_faces(faces);
}

void validate_action(const DeltaComplex& x, const DeltaAction& action) {
    if (action.order < 1) throw InputError("group action: order must be positive");
    if (static_cast<int>(action.perm.size()) < x.dim() + 1)
        throw InputError("group action: missing permutations");
    for (int d = 0; d <= x.dim(); ++d) {
        const auto& p = action.perm[d];
        if (p.size() != x.cell_count(d))
            throw InputError("group action: permutation size mismatch");
        std::vector<char> hit(p.size(), 0);
        for (int img : p) {
            if (img < 0 || img >= static_cast<int>(p.size()) || hit[img])
                throw InputError("group action: not a permutation");
            hit[img] = 1;
        }
    }
    // Compatibility with the face maps.
    for (int d = 1; d <= x.dim(); ++d)
        for (std::size_t c = 0; c < x.cell_count(d); ++c)
            for (int i = 0; i <= d; ++i)
                if (x.face(d, action.perm[d][c], i) !=
                    action.perm[d - 1][x.face(d, static_cast<int>(c), i)])
                    throw InputError("group action: does not commute with face maps");
    // order-th power is the identity.
    for (int d = 0; d <= x.dim(); ++d) {
        for (std::size_t c = 0; c < x.cell_count(d); ++c) {
            int cur = static_cast<int>(c);
            for (int t = 0; t < action.order; ++t) cur = action.perm[d][cur];
            if (cur != static_cast<int>(c))
                throw InputError("group action: generator order does not divide the group order");
        }
    }
}

// ---------------------------------------------------------------------------
// Barycentric subdivision at the delta level.

namespace {

// A cell of the subdivision: a cell of the input together with a strictly
// increasing chain of vertex-position subsets ending at the full set.
struct SdCell {
    int src_dim;
    int src_cell;
    std::vector<std::vector<int>> chain;
};

std::string chain_key(int src_dim, int src_cell, const std::vector<std::vector<int>>& chain) {
    std::ostringstream s;
    s << src_dim << ':' << src_cell;
    for (const auto& part : chain) {
        s << '|';
        for (int p : part) s << p << ',';
    }
    return s.str();
}

void enumerate_chains(int m, int length, std::vector<std::vector<int>>& chain,
                      std::vector<std::vector<std::vector<int>>>& out) {
    if (static_cast<int>(chain.size()) == length) {
        out.push_back(chain);
        return;
    }
    // Next element is a proper nonempty subset of the smallest current one
    // (chains are built downwards from the full set, then reversed).
    const std::vector<int> top = chain.back();
    const int n = static_cast<int>(top.size());
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
        std::vector<int> sub;
        for (int b = 0; b < n; ++b)
            if (mask & (1 << b)) sub.push_back(top[b]);
        chain.push_back(std::move(sub));
        enumerate_chains(m, length, chain, out);
        chain.pop_back();
    }
}

struct SdTable {
    std::vector<std::vector<SdCell>> cells;          // per output dimension
    std::vector<std::map<std::string, int>> index;   // chain key -> id
};

// Deterministic enumeration of the subdivision cells; shared between the
// subdivision itself and the action transport so ids always line up.
SdTable build_sd_table(const DeltaComplex& x) {
    const int D = x.dim();
    SdTable t;
    t.cells.resize(D + 1);
    t.index.resize(D + 1);
    for (int k = 0; k <= D; ++k) {
        for (int m = k; m <= D; ++m) {
            std::vector<int> full(m + 1);
            std::iota(full.begin(), full.end(), 0);
            std::vector<std::vector<std::vector<int>>> chains;
            {
                std::vector<std::vector<int>> chain{full};
                enumerate_chains(m, k + 1, chain, chains);
            }
            for (auto& chain : chains) {
                std::reverse(chain.begin(), chain.end());  // ascending, top = full
                for (std::size_t c = 0; c < x.cell_count(m); ++c) {
                    t.index[k].emplace(chain_key(m, static_cast<int>(c), chain),
                                       static_cast<int>(t.cells[k].size()));
                    t.cells[k].push_back(SdCell{m, static_cast<int>(c), chain});
                }
            }
        }
    }
    return t;
}

}  // namespace

DeltaSubdivision barycentric_subdivision(const DeltaComplex& x,
                                         const std::string& name_prefix) {
    const int D = x.dim();
    SdTable table = build_sd_table(x);
    auto& cells = table.cells;
    auto& index = table.index;

    // Vertex names: barycenters of 0-cells keep their name.
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> origin;
    names.reserve(cells[0].size());
    for (const auto& sc : cells[0]) {
        if (sc.src_dim == 0) {
            names.push_back(x.vertex_name(sc.src_cell));
        } else {
            std::ostringstream s;
            s << name_prefix << ".b" << sc.src_dim << "." << sc.src_cell;
            names.push_back(s.str());
        }
        origin.emplace_back(sc.src_dim, sc.src_cell);
    }

    std::vector<std::vector<std::vector<int>>> face_maps(D + 1);
    for (int k = 1; k <= D; ++k) {
        face_maps[k].reserve(cells[k].size());
        for (const auto& sc : cells[k]) {
            std::vector<int> fm(k + 1);
            for (int i = 0; i <= k; ++i) {
                if (i < k) {
                    auto chain = sc.chain;
                    chain.erase(chain.begin() + i);
                    fm[i] = index[k - 1].at(chain_key(sc.src_dim, sc.src_cell, chain));
                } else {
                    // Dropping the top element lands in the face of the source
                    // cell spanned by the next-to-top subset.
                    const std::vector<int>& span = sc.chain[k - 1];
                    const auto [td, tc] = x.restrict_cell(sc.src_dim, sc.src_cell, span);
                    std::vector<int> relabel(sc.src_dim + 1, -1);
                    for (std::size_t p = 0; p < span.size(); ++p)
                        relabel[span[p]] = static_cast<int>(p);
                    std::vector<std::vector<int>> chain;
                    chain.reserve(k);
                    for (int j = 0; j < k; ++j) {
                        std::vector<int> part;
                        part.reserve(sc.chain[j].size());
                        for (int p : sc.chain[j]) part.push_back(relabel[p]);
                        chain.push_back(std::move(part));
                    }
                    fm[i] = index[k - 1].at(chain_key(td, tc, chain));
                }
            }
            face_maps[k].push_back(std::move(fm));
        }
    }

    DeltaSubdivision out;
    out.complex = DeltaComplex::build(std::move(names), std::move(face_maps));
    out.vertex_origin = std::move(origin);
    return out;
}

DeltaAction transport_action(const DeltaComplex& x, const DeltaAction& action,
                             const DeltaSubdivision& sd) {
    const int D = sd.complex.dim();
    const SdTable table = build_sd_table(x);
    DeltaAction out;
    out.order = action.order;
    out.perm.resize(D + 1);
    for (int k = 0; k <= D; ++k) {
        out.perm[k].resize(table.cells[k].size());
        for (std::size_t i = 0; i < table.cells[k].size(); ++i) {
            const SdCell& sc = table.cells[k][i];
            const int img = action.perm[sc.src_dim][sc.src_cell];
            out.perm[k][i] = table.index[k].at(chain_key(sc.src_dim, img, sc.chain));
        }
    }
    validate_action(sd.complex, out);
    return out;
}

DeltaQuotient quotient(const DeltaComplex& x,
                       const std::vector<std::tuple<int, int, int>>& identifications) {
    const int D = x.dim();
    std::vector<UnionFind> uf;
    uf.reserve(D + 1);
    for (int d = 0; d <= D; ++d) uf.emplace_back(static_cast<int>(x.cell_count(d)));

    // Closure: identifying two cells identifies their corresponding faces.
    std::vector<std::tuple<int, int, int>> work(identifications.begin(),
                                                identifications.end());
    while (!work.empty()) {
        auto [d, a, b] = work.back();
        work.pop_back();
        if (!uf[d].unite(a, b)) continue;
        if (d >= 1)
            for (int i = 0; i <= d; ++i)
                work.emplace_back(d - 1, x.face(d, a, i), x.face(d, b, i));
    }

    DeltaQuotient out;
    out.cell_map.resize(D + 1);
    std::vector<std::vector<int>> reps(D + 1);
    for (int d = 0; d <= D; ++d) {
        out.cell_map[d].assign(x.cell_count(d), -1);
        for (int c = 0; c < static_cast<int>(x.cell_count(d)); ++c) {
            if (uf[d].find(c) == c) {
                out.cell_map[d][c] = static_cast<int>(reps[d].size());
                reps[d].push_back(c);
            }
        }
        for (int c = 0; c < static_cast<int>(x.cell_count(d)); ++c)
            out.cell_map[d][c] = out.cell_map[d][uf[d].find(c)];
    }

    // Merged 0-cells take the least name of their class.
    std::vector<std::string> names(reps[0].size());
    for (std::size_t i = 0; i < reps[0].size(); ++i) names[i] = x.vertex_name(reps[0][i]);
    for (int c = 0; c < static_cast<int>(x.cell_count(0)); ++c) {
        std::string& slot = names[out.cell_map[0][c]];
        if (x.vertex_name(c) < slot) slot = x.vertex_name(c);
    }

    std::vector<std::vector<std::vector<int>>> face_maps(D + 1);
    for (int d = 1; d <= D; ++d) {
        face_maps[d].reserve(reps[d].size());
        for (int rep : reps[d]) {
            std::vector<int> fm(d + 1);
            for (int i = 0; i <= d; ++i) fm[i] = out.cell_map[d - 1][x.face(d, rep, i)];
            face_maps[d].push_back(std::move(fm));
        }
    }
    out.complex = DeltaComplex::build(std::move(names), std::move(face_maps));
    return out;
}

}  // namespace coxdim
