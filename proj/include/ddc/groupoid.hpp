#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "geometry.hpp"
#include "objects.hpp"

namespace ddc {

/// All marked points of C(p,q) in the fixed order x_1..x_p, y_1..y_q.
inline std::vector<MarkedPoint> marked_points(const CategoryParams& P) {
    std::vector<MarkedPoint> out;
    for (int i = 1; i <= P.p(); ++i) out.push_back({Side::X, i});
    for (int i = 1; i <= P.q(); ++i) out.push_back({Side::Y, i});
    return out;
}

/// The class of an arc in M = H_1(C, l), modeled as Z^l + Z: `delta` is the
/// boundary image (end minus start as indicator vectors) and `wind` the level
/// change of the canonical lift. Additive under concatenation.
struct HomologyClass {
    std::map<MarkedPoint, long long> delta; // zero entries omitted
    long long wind = 0;

    bool operator==(const HomologyClass& o) const = default;

    HomologyClass operator+(const HomologyClass& o) const {
        HomologyClass r = *this;
        for (auto& [pt, v] : o.delta) {
            long long nv = r.delta[pt] + v;
            if (nv == 0) r.delta.erase(pt);
            else r.delta[pt] = nv;
        }
        r.wind += o.wind;
        return r;
    }
};

inline HomologyClass homology_class(const Arc& a) {
    HomologyClass h;
    h.wind = a.w;
    if (a.from == a.to) return h;
    h.delta[a.to] = 1;
    h.delta[a.from] = -1;
    return h;
}

/// The computable invariant of the wide subgroupoid generated by a set of
/// arcs: a partition of the marked points, per-point base weights to the
/// block root, and a per-block period (gcd of cycle weights; 0 = free).
struct SubgroupoidDescriptor {
    // parallel arrays indexed by marked point (in marked_points order)
    std::vector<MarkedPoint> points;
    std::vector<int> block;            // block id per point, roots canonical
    std::vector<long long> base;       // weight of a path root -> point (0 on roots)
    std::vector<long long> period;     // per block id, gcd of cycle weights

    int index_of(const MarkedPoint& pt) const {
        for (size_t k = 0; k < points.size(); ++k)
            if (points[k] == pt) return static_cast<int>(k);
        throw domain_error("descriptor: unknown marked point " + pt.str());
    }

    /// Membership of the class (from, to, w).
    bool contains(const MarkedPoint& from, const MarkedPoint& to, long long w) const {
        int s = index_of(from), t = index_of(to);
        if (block[s] != block[t]) return false;
        long long need = base[t] - base[s];
        long long g = period[block[s]];
        if (g == 0) return w == need;
        return floor_mod(w - need, g) == 0;
    }

    bool contains(const Arc& a) const { return contains(a.from, a.to, a.w); }

    /// Canonical form: bases reduced mod the period and normalized to the
    /// block root, making equality of descriptors equality of subgroupoids.
    void normalize() {
        for (size_t k = 0; k < points.size(); ++k) {
            long long g = period[block[k]];
            base[k] = g > 0 ? floor_mod(base[k], g) : base[k];
        }
    }

    bool operator==(const SubgroupoidDescriptor& o) const {
        return points == o.points && block == o.block && base == o.base && period == o.period;
    }
};

/// Builds the descriptor of the subgroupoid generated by `arcs`: a weighted
/// multigraph on the marked points with one edge (from -> to, w) per arc;
/// components and bases via BFS on a spanning tree, periods as gcds of
/// fundamental cycle weights.
inline SubgroupoidDescriptor generated_subgroupoid(const CategoryParams& P,
                                                   const std::vector<Arc>& arcs) {
    SubgroupoidDescriptor D;
    D.points = marked_points(P);
    const int n = static_cast<int>(D.points.size());
    auto idx = [&](const MarkedPoint& pt) { return D.index_of(pt); };

    std::vector<std::vector<std::pair<int, long long>>> adj(n); // (neighbor, weight from this)
    std::vector<std::tuple<int, int, long long>> edges;
    for (const Arc& a : arcs) {
        int s = idx(a.from), t = idx(a.to);
        edges.emplace_back(s, t, a.w);
        if (s != t) {
            adj[s].push_back({t, a.w});
            adj[t].push_back({s, -a.w});
        }
    }

    D.block.assign(n, -1);
    D.base.assign(n, 0);
    std::vector<long long> gcds;
    for (int root = 0; root < n; ++root) {
        if (D.block[root] != -1) continue;
        int id = static_cast<int>(gcds.size());
        gcds.push_back(0);
        D.block[root] = id;
        D.base[root] = 0;
        std::vector<int> queue{root};
        for (size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (auto [v, w] : adj[u]) {
                if (D.block[v] == -1) {
                    D.block[v] = id;
                    D.base[v] = D.base[u] + w;
                    queue.push_back(v);
                }
            }
        }
    }
    for (auto [s, t, w] : edges) {
        long long cycle = w - (D.base[t] - D.base[s]);
        if (cycle != 0) {
            long long& g = gcds[D.block[s]];
            g = std::gcd(g, cycle < 0 ? -cycle : cycle);
        }
    }
    D.period = gcds;
    D.normalize();
    return D;
}

inline SubgroupoidDescriptor generated_subgroupoid(const CategoryParams& P,
                                                   const std::vector<IndecObject>& objs) {
    std::vector<Arc> arcs;
    arcs.reserve(objs.size());
    for (const auto& o : objs) arcs.push_back(arc_of(P, o));
    return generated_subgroupoid(P, arcs);
}

inline bool groupoid_contains(const SubgroupoidDescriptor& G, const Arc& a) {
    return G.contains(a);
}

/// Gamma(A) subset Gamma(B), tested on generators.
inline bool groupoid_leq(const SubgroupoidDescriptor& B, const std::vector<Arc>& a_generators) {
    return std::all_of(a_generators.begin(), a_generators.end(),
                       [&](const Arc& a) { return B.contains(a); });
}

/// One step of a witness path: traverse `arc`, reversed when `reversed`.
struct PathStep {
    Arc arc;
    bool reversed = false;
};

/// A path of generator arcs concatenating to the class (from -> to, w), found
/// by BFS on (marked point, level) states. Returns nullopt iff the class is
/// not in the generated subgroupoid.
inline std::optional<std::vector<PathStep>> witness_path(const CategoryParams& P,
                                                         const std::vector<Arc>& gens,
                                                         const Arc& target) {
    SubgroupoidDescriptor D = generated_subgroupoid(P, gens);
    if (!D.contains(target)) return std::nullopt;
    long long band = std::abs(target.w) + 2;
    for (const Arc& g : gens) band += std::abs(g.w) + 1;
    band *= static_cast<long long>(P.p() + P.q() + 2);

    struct State {
        MarkedPoint pt;
        long long level;
        auto operator<=>(const State&) const = default;
    };
    State start{target.from, 0}, goal{target.to, target.w};
    std::map<State, std::pair<State, PathStep>> prev;
    std::vector<State> queue{start};
    std::set<State> seen{start};
    for (size_t h = 0; h < queue.size(); ++h) {
        State u = queue[h];
        if (u == goal) {
            std::vector<PathStep> steps;
            State cur = goal;
            while (cur != start) {
                auto& [par, step] = prev.at(cur);
                steps.push_back(step);
                cur = par;
            }
            std::reverse(steps.begin(), steps.end());
            return steps;
        }
        for (const Arc& g : gens) {
            std::vector<std::pair<State, PathStep>> nexts;
            if (g.from == u.pt) nexts.push_back({{g.to, u.level + g.w}, {g, false}});
            if (g.to == u.pt) nexts.push_back({{g.from, u.level - g.w}, {g, true}});
            for (auto& [v, step] : nexts) {
                if (std::abs(v.level) > band || seen.count(v)) continue;
                seen.insert(v);
                prev.emplace(v, std::make_pair(u, step));
                queue.push_back(v);
            }
        }
    }
    throw internal_error("witness_path: descriptor admits the class but no path found in band");
}

// ---------------------------------------------------------------------------
// Grothendieck-group rank check.
// ---------------------------------------------------------------------------

/// The arcs of the full exceptional collection
/// E = { Z_0, X_{p-1}, ..., X_1, Y_{q-1}, ..., Y_1, Z } with Z_0 = Z^0(0,q)
/// and Z = Z^0(1,1).
inline std::vector<IndecObject> full_exceptional_collection(const CategoryParams& P) {
    std::vector<IndecObject> E;
    E.push_back({Family::Z, 0, 0, P.q()});
    for (int i = P.p() - 1; i >= 1; --i) E.push_back({Family::X, 0, i, i});
    for (int i = P.q() - 1; i >= 1; --i) E.push_back({Family::Y, 0, i, i});
    E.push_back({Family::Z, 0, 1, 1});
    return E;
}

namespace groupoiddetail {

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
inline long long int_det(std::vector<std::vector<long long>> a) {
    const size_t n = a.size();
    long long sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

} // namespace groupoiddetail

/// The homology classes of the arcs of E, in the rank-(p+q) coordinates
/// (delta with the x_1 entry dropped, plus wind), as a square matrix.
inline std::vector<std::vector<long long>> k0_class_matrix(const CategoryParams& P) {
    auto pts = marked_points(P);
    std::vector<std::vector<long long>> M;
    for (const IndecObject& e : full_exceptional_collection(P)) {
        HomologyClass h = homology_class(arc_of(P, e));
        std::vector<long long> row;
        for (size_t k = 1; k < pts.size(); ++k) {
            auto it = h.delta.find(pts[k]);
            row.push_back(it == h.delta.end() ? 0 : it->second);
        }
        row.push_back(h.wind);
        M.push_back(row);
    }
    return M;
}

/// True iff the E-classes form a basis of M (unimodular matrix).
inline bool k0_basis_check(const CategoryParams& P) {
    long long d = groupoiddetail::int_det(k0_class_matrix(P));
    return d == 1 || d == -1;
}

} // namespace ddc
