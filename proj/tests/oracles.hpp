// Test-only oracles, kept independent of the library's computation paths:
// rational rank by fraction-free elimination, invariant factors by gcds of
// minors, chain counting for subdivisions, brute-force graph searches, and
// a Prufer-sequence tree generator.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "coxdim/integer_matrix.hpp"
#include "coxdim/simplicial.hpp"
#include "coxdim/spine.hpp"

namespace oracles {

using coxdim::Integer;
using coxdim::IntegerMatrix;

using Dense = std::vector<std::vector<Integer>>;

inline Dense to_dense(const IntegerMatrix& m) {
    Dense a(m.rows(), std::vector<Integer>(m.cols(), 0));
    for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
    return a;
}

// Rank over Q by Bareiss fraction-free elimination.
inline int rational_rank(const IntegerMatrix& m) {
    Dense a = to_dense(m);
    const int rows = m.rows(), cols = m.cols();
    int rank = 0;
    Integer prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

inline Integer determinant(const Dense& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Integer det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        Dense minor(n - 1, std::vector<Integer>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1][cc++] = a[r][c];
        }
        const Integer term = a[0][j] * determinant(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// Invariant factors via determinantal divisors: d_k = gcd of all k x k
// minors, s_k = d_k / d_{k-1}.  Exponential; only for tiny matrices.
inline std::vector<Integer> snf_by_minors(const IntegerMatrix& m) {
    const Dense a = to_dense(m);
    const int rows = m.rows(), cols = m.cols();
    std::vector<Integer> divisors;
    Integer prev = 1;
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        Integer g = 0;
        std::vector<int> rsel(k), csel(k);
        std::iota(rsel.begin(), rsel.end(), 0);
        bool more_rows = true;
        while (more_rows) {
            std::iota(csel.begin(), csel.end(), 0);
            bool more_cols = true;
            while (more_cols) {
                Dense sub(k, std::vector<Integer>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = a[rsel[i]][csel[j]];
                g = boost::multiprecision::gcd(g, determinant(sub));
                // next column combination
                int pos = k - 1;
                while (pos >= 0 && csel[pos] == cols - k + pos) --pos;
                if (pos < 0) {
                    more_cols = false;
                } else {
                    ++csel[pos];
                    for (int i = pos + 1; i < k; ++i) csel[i] = csel[i - 1] + 1;
                }
            }
            int pos = k - 1;
            while (pos >= 0 && rsel[pos] == rows - k + pos) --pos;
            if (pos < 0) {
                more_rows = false;
            } else {
                ++rsel[pos];
                for (int i = pos + 1; i < k; ++i) rsel[i] = rsel[i - 1] + 1;
            }
        }
        if (g == 0) break;  // all higher minors vanish
        g = boost::multiprecision::abs(g);
        divisors.push_back(g / prev);
        prev = g;
    }
    return divisors;
}

// Number of k-faces of the barycentric subdivision of the n-simplex: strict
// chains of k+1 nonempty subsets of an (n+1)-set, counted by DP over the
// size of the largest subset (extending a chain whose top has size t by a
// superset of size s picks the s-t new elements from the m-t remaining).
inline long long sd_simplex_face_count(int n, int k) {
    const int m = n + 1;
    std::vector<std::vector<long long>> choose(m + 1, std::vector<long long>(m + 1, 0));
    for (int i = 0; i <= m; ++i) {
        choose[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : 0);
    }
    // chains[len][s]: chains of `len` subsets whose largest has size s
    std::vector<std::vector<long long>> chains(k + 2, std::vector<long long>(m + 1, 0));
    for (int s = 1; s <= m; ++s) chains[1][s] = choose[m][s];
    for (int len = 2; len <= k + 1; ++len)
        for (int s = len; s <= m; ++s)
            for (int t = len - 1; t < s; ++t)
                chains[len][s] += chains[len - 1][t] * choose[m - t][s - t];
    long long total = 0;
    for (int s = 1; s <= m; ++s) total += chains[k + 1][s];
    return total;
}

// Exhaustive search for an induced 4-cycle.
inline bool has_induced_square(const coxdim::Graph& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a >= c || b >= d || a == b || a == d || b == c || c == d) continue;
                    if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) &&
                        g.adjacent(d, a) && !g.adjacent(a, c) && !g.adjacent(b, d))
                        return true;
                }
    return false;
}

// Exhaustive triangle search (for flagging triangle-free graphs).
inline bool has_triangle(const coxdim::Graph& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return true;
    return false;
}

// --- named corpus -----------------------------------------------------------

inline coxdim::SimplicialComplex cycle_complex(int n) {
    std::vector<std::vector<std::string>> faces;
    for (int i = 0; i < n; ++i)
        faces.push_back({"v" + std::to_string(i), "v" + std::to_string((i + 1) % n)});
    return coxdim::SimplicialComplex::from_maximal_faces(faces);
}

inline coxdim::SimplicialComplex path_complex(int edges) {
    std::vector<std::vector<std::string>> faces;
    for (int i = 0; i < edges; ++i)
        faces.push_back({"v" + std::to_string(i), "v" + std::to_string(i + 1)});
    return coxdim::SimplicialComplex::from_maximal_faces(faces);
}

inline coxdim::SimplicialComplex sphere2() {
    return coxdim::SimplicialComplex::from_maximal_faces(
        {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

// Minimal 6-vertex triangulation of the projective plane (10 triangles,
// 15 edges, every edge in exactly two triangles, Euler characteristic 1).
inline coxdim::SimplicialComplex projective_plane6() {
    return coxdim::SimplicialComplex::from_maximal_faces(
        {{"1", "2", "4"}, {"1", "2", "5"}, {"1", "3", "4"}, {"1", "3", "6"},
         {"1", "5", "6"}, {"2", "3", "5"}, {"2", "3", "6"}, {"2", "4", "6"},
         {"3", "4", "5"}, {"4", "5", "6"}});
}

inline coxdim::SimplicialComplex full_simplex(int n) {
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("v" + std::to_string(i));
    return coxdim::SimplicialComplex::from_maximal_faces({names});
}

inline coxdim::Graph petersen() {
    std::vector<std::string> names;
    for (int i = 0; i < 10; ++i) names.push_back("p" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(names[i], names[(i + 1) % 5]);
        edges.emplace_back(names[i], names[i + 5]);
        edges.emplace_back(names[5 + i], names[5 + (i + 2) % 5]);
    }
    return coxdim::Graph::from_names(names, edges);
}

// Deterministic random complex on <= max_vertices vertices.
inline coxdim::SimplicialComplex random_complex(std::mt19937& rng, int max_vertices,
                                                int max_faces, int max_face_size) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    const int n = nv(rng);
    std::uniform_int_distribution<int> nf(1, max_faces);
    std::uniform_int_distribution<int> fs(1, max_face_size);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<std::vector<std::string>> faces;
    const int count = nf(rng);
    for (int i = 0; i < count; ++i) {
        std::set<int> vs;
        const int size = fs(rng);
        for (int j = 0; j < size; ++j) vs.insert(pick(rng));
        std::vector<std::string> face;
        for (int v : vs) face.push_back("v" + std::to_string(v));
        faces.push_back(std::move(face));
    }
    return coxdim::SimplicialComplex::from_maximal_faces(faces);
}

inline std::vector<coxdim::SimplicialComplex> corpus(std::size_t size) {
    std::vector<coxdim::SimplicialComplex> out;
    out.push_back(coxdim::SimplicialComplex());
    out.push_back(coxdim::SimplicialComplex::from_maximal_faces({{"pt"}}));
    out.push_back(coxdim::SimplicialComplex::from_maximal_faces({{"a"}, {"b"}}));
    out.push_back(cycle_complex(4));
    out.push_back(cycle_complex(5));
    out.push_back(path_complex(2));
    out.push_back(sphere2());
    out.push_back(projective_plane6());
    out.push_back(full_simplex(2));
    out.push_back(full_simplex(3));
    out.push_back(coxdim::cone(cycle_complex(5), "apex"));
    std::mt19937 rng(20240817);
    while (out.size() < size) out.push_back(random_complex(rng, 6, 8, 4));
    return out;
}

// --- independent quotient-tree generator ------------------------------------

// All labeled trees on n vertices from Prufer sequences.
inline std::vector<std::vector<std::pair<int, int>>> all_labeled_trees(int n) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (n == 1) {
        out.push_back({});
        return out;
    }
    if (n == 2) {
        out.push_back({{0, 1}});
        return out;
    }
    const int len = n - 2;
    std::vector<int> seq(len, 0);
    for (;;) {
        // decode
        std::vector<int> degree(n, 1);
        for (int s : seq) ++degree[s];
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) leaves.insert(v);
        std::vector<std::pair<int, int>> edges;
        std::vector<int> work(seq);
        for (int s : work) {
            const int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
            if (--degree[s] == 1) leaves.insert(s);
        }
        const int a = *leaves.begin();
        const int b = *std::next(leaves.begin());
        edges.emplace_back(std::min(a, b), std::max(a, b));
        out.push_back(std::move(edges));
        // next sequence
        int pos = len - 1;
        while (pos >= 0 && seq[pos] == n - 1) {
            seq[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++seq[pos];
    }
    return out;
}

// Isomorphism classes of valid quotient trees for r special labels, by
// filtering all labeled trees on r + m vertices (m <= r - 2) and reducing by
// the permutations of the trivial labels.
inline std::size_t brute_force_tree_count(int r) {
    std::set<std::vector<std::pair<int, int>>> classes;
    for (int m = 0; m + r >= 2 && m <= std::max(0, r - 2); ++m) {
        const int n = r + m;
        if (n < 2 && r >= 2) continue;
        for (const auto& edges : all_labeled_trees(n)) {
            std::vector<int> degree(n, 0);
            for (const auto& [a, b] : edges) {
                ++degree[a];
                ++degree[b];
            }
            bool valid = true;
            for (int v = r; v < n; ++v)
                if (degree[v] < 3) valid = false;
            if (!valid) continue;
            // canonical form: min over permutations of trivial labels
            std::vector<int> perm(m);
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<std::pair<int, int>> best;
            do {
                std::vector<std::pair<int, int>> mapped;
                for (const auto& [a, b] : edges) {
                    const int x = a < r ? a : r + perm[a - r];
                    const int y = b < r ? b : r + perm[b - r];
                    mapped.emplace_back(std::min(x, y), std::max(x, y));
                }
                std::sort(mapped.begin(), mapped.end());
                if (best.empty() || mapped < best) best = std::move(mapped);
            } while (std::next_permutation(perm.begin(), perm.end()));
            classes.insert(best);
        }
    }
    return classes.size();
}

}  // namespace oracles
