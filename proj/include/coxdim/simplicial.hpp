#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxdim/base.hpp"

namespace coxdim {

/// A simplex inside a fixed complex: strictly increasing vertex indices.
/// The empty vector is the empty simplex.
using VertexList = std::vector<int>;

/// Finite simple graph.  Vertices are opaque strings, kept sorted so that
/// the index order is the lexicographic order on names.
class Graph {
public:
    Graph() = default;
    static Graph from_names(const std::vector<std::string>& vertices,
                            const std::vector<std::pair<std::string, std::string>>& edges);

    const std::vector<std::string>& vertex_names() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    int index_of(const std::string& name) const;  // -1 if absent
    bool adjacent(int u, int v) const;
    std::vector<std::vector<int>> adjacency() const;

    bool operator==(const Graph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    std::vector<std::string> vertices_;             // sorted, unique
    std::vector<std::pair<int, int>> edges_;        // (i < j), sorted, unique
};

/// Finite abstract simplicial complex stored by its maximal faces.  The full
/// face list is materialized lazily per dimension and cached; the cache is
/// shared between copies and safe for concurrent read-through.
class SimplicialComplex {
public:
    SimplicialComplex();  // the empty complex (its only face is the empty simplex)

    static SimplicialComplex from_maximal_faces(
        const std::vector<std::vector<std::string>>& faces);

    const std::vector<std::string>& vertex_names() const { return vertices_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int dim() const;  // -1 for the empty complex

    const std::vector<VertexList>& maximal_faces() const { return maximal_faces_; }

    /// All faces of dimension d, sorted lexicographically.  Empty for d < 0
    /// or d > dim().
    const std::vector<VertexList>& faces(int d) const;

    /// Number of nonempty faces.
    std::size_t face_count() const;

    bool has_face(const VertexList& f) const;
    bool has_face_names(const std::vector<std::string>& names) const;

    /// Index of f within faces(f.size()-1), or -1.
    int face_index(const VertexList& f) const;

    const std::string& name_of(int v) const { return vertices_[v]; }
    int index_of(const std::string& name) const;  // -1 if absent

    std::vector<std::string> face_names(const VertexList& f) const;

    /// True when every maximal face of other is a face of this complex.
    bool contains_subcomplex(const SimplicialComplex& other) const;

    bool operator==(const SimplicialComplex& other) const {
        return vertices_ == other.vertices_ && maximal_faces_ == other.maximal_faces_;
    }
    bool operator!=(const SimplicialComplex& other) const { return !(*this == other); }

private:
    struct FaceCache {
        std::mutex mu;
        std::map<int, std::vector<VertexList>> by_dim;
    };

    std::vector<std::string> vertices_;       // sorted, unique
    std::vector<VertexList> maximal_faces_;   // canonical order, pairwise non-contained
    std::shared_ptr<FaceCache> cache_;
};

Graph one_skeleton(const SimplicialComplex& k);

/// Faces are exactly the cliques of g (maximal cliques via Bron-Kerbosch).
SimplicialComplex flag_complex(const Graph& g);

bool is_flag(const SimplicialComplex& k);

/// Full subcomplex on the vertex set w: the faces of k entirely inside w.
SimplicialComplex full_subcomplex(const SimplicialComplex& k,
                                  const std::vector<std::string>& w);

/// Complement convention for "L minus sigma": the full subcomplex on the
/// complementary vertex set.
SimplicialComplex complement_complex(const SimplicialComplex& k, const VertexList& sigma);

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex);

SimplicialComplex union_complexes(const SimplicialComplex& a, const SimplicialComplex& b);

/// Partition of the vertices by connectivity of the 1-skeleton.  Components
/// are sorted name lists, ordered by their first vertex.  The empty complex
/// has zero components.
std::vector<std::vector<std::string>> connected_components(const SimplicialComplex& k);
std::vector<std::vector<std::string>> connected_components(const Graph& g);

inline bool is_connected(const SimplicialComplex& k) {
    return connected_components(k).size() == 1;
}
inline bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

/// Name of the subdivision vertex sitting at the barycenter of a face,
/// derived from the face's (sorted) vertex names.
std::string subdivision_vertex_name(const std::vector<std::string>& face);

struct Subdivision {
    SimplicialComplex complex;
    /// new vertex name -> originating face of the input (sorted names)
    std::map<std::string, std::vector<std::string>> provenance;
};

/// Barycentric subdivision: vertices are the faces of k, simplices are the
/// chains of faces.
Subdivision barycentric_subdivision(const SimplicialComplex& k);

}  // namespace coxdim
