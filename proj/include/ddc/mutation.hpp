#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "collections.hpp"
#include "geometry.hpp"
#include "groupoid.hpp"

namespace ddc {

enum class MutationDirection { Left, Right };

/// A mutable morphism of a reduced arc-collection, recorded geometrically:
/// the basis morphism from member `a` to (a shift of) member `b` realized at
/// the shared lifted vertex, with both arcs anchored there. Right mutation
/// replaces a, left mutation replaces b; both add the concatenated arc.
struct MutationMove {
    size_t a = 0;
    size_t b = 0;
    MarkedPoint vertex;
    AnchoredRay ray_a; // alpha_a parametrised out of the vertex
    AnchoredRay ray_b; // alpha_b parametrised out of the vertex
    MutationDirection direction = MutationDirection::Right;

    auto operator<=>(const MutationMove&) const = default;
};

/// All mutable moves of a reduced arc-collection: incidences (a,b,v) whose
/// cut order witnesses a morphism a -> b and with no factoring arc from the
/// collection strictly between, in both directions.
inline std::vector<MutationMove> mutable_moves(const Collection& coll) {
    if (!coll.is_arc_collection() || !coll.is_reduced())
        throw domain_error("mutable_moves: collection must be a reduced arc-collection");
    const auto& arcs = coll.arcs();
    std::vector<MutationMove> out;
    for (size_t a = 0; a < arcs.size(); ++a)
        for (size_t b = 0; b < arcs.size(); ++b) {
            if (a == b) continue;
            std::vector<MarkedPoint> verts{arcs[a].from};
            if (arcs[a].to != arcs[a].from) verts.push_back(arcs[a].to);
            for (const MarkedPoint& v : verts) {
                LiftedPoint at{v, 0};
                for (const AnchoredRay& ra : rays_at(arcs[a], at))
                    for (const AnchoredRay& rb : rays_at(arcs[b], at)) {
                        if (ra.far == rb.far) continue;
                        if (!cut_less(ra.far, rb.far, at)) continue;
                        if (!factoring_arcs(ra, rb, at, arcs).empty()) continue;
                        out.push_back({a, b, v, ra, rb, MutationDirection::Right});
                        out.push_back({a, b, v, ra, rb, MutationDirection::Left});
                    }
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Applies a move: the concatenation alpha_a . alpha_b at the vertex replaces
/// member a (right) or member b (left). The result is re-validated.
inline Collection mutate(const Collection& coll, const MutationMove& move) {
    auto moves = mutable_moves(coll);
    if (std::find(moves.begin(), moves.end(), move) == moves.end())
        throw domain_error("mutate: move is not mutable in this collection");
    std::vector<Arc> arcs = coll.arcs();
    Arc composite = concatenate(move.ray_a, move.ray_b);
    size_t removed = move.direction == MutationDirection::Right ? move.a : move.b;
    arcs.erase(arcs.begin() + static_cast<long>(removed));
    arcs.push_back(composite);
    Collection next = Collection::from_arcs(coll.params(), arcs);
    if (next.size() != coll.size() || !next.is_arc_collection() || !next.is_reduced())
        throw internal_error("mutate: result is not a reduced arc-collection of the same size");
    return next;
}

/// Breadth-first search over the mutation graph from c1, up to `budget`
/// visited collections. `reached` is authoritative; when false,
/// `proven_distinct` separates certainly-inequivalent inputs from budget
/// exhaustion.
struct MutEquivResult {
    bool reached = false;
    bool proven_distinct = false;
    bool budget_exhausted = false;
};

inline MutEquivResult mutation_equivalent(const Collection& c1, const Collection& c2,
                                          long long budget = 100000) {
    if (c1.size() != c2.size()) return {false, true, false};
    SubgroupoidDescriptor d1 = c1.descriptor(), d2 = c2.descriptor();
    if (!(d1 == d2)) return {false, true, false};
    auto key = [](const Collection& c) { return c.arcs(); };
    std::set<std::vector<Arc>> seen{key(c1)};
    std::deque<Collection> frontier{c1};
    const auto target = key(c2);
    long long visited = 0;
    while (!frontier.empty()) {
        Collection cur = frontier.front();
        frontier.pop_front();
        if (key(cur) == target) return {true, false, false};
        if (++visited > budget) return {false, false, true};
        for (const MutationMove& mv : mutable_moves(cur)) {
            Collection next = mutate(cur, mv);
            if (seen.insert(key(next)).second) frontier.push_back(next);
        }
    }
    return {false, false, false};
}

/// Partition of the members into connected components of the
/// nonzero-orbit-hom relation (fully orthogonal blocks).
inline std::vector<std::vector<size_t>> connected_components(const Collection& coll) {
    const auto& P = coll.params();
    const auto& ms = coll.members();
    const size_t n = ms.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<size_t>> blocks;
    for (size_t s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(blocks.size());
        blocks.push_back({});
        std::vector<size_t> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            size_t u = queue.back();
            queue.pop_back();
            blocks[id].push_back(u);
            for (size_t v = 0; v < n; ++v) {
                if (comp[v] != -1 || u == v) continue;
                if (hom_dim_orbit(P, ms[u], ms[v]) != 0 || hom_dim_orbit(P, ms[v], ms[u]) != 0) {
                    comp[v] = id;
                    queue.push_back(v);
                }
            }
        }
        std::sort(blocks[id].begin(), blocks[id].end());
    }
    return blocks;
}

/// The mutation partial order, decided by groupoid containment
/// (routes II <=> III of the lattice-structure proposition).
inline bool leq_mut(const Collection& c1, const Collection& c2) {
    if (!c1.is_reduced() || !c2.is_reduced())
        throw domain_error("leq_mut: collections must be reduced arc-collections");
    return groupoid_leq(c2.descriptor(), c1.arcs());
}

/// True iff all members are exceptional and some ordering has one-directional
/// orbit homs (the collection admits an exceptional-collection ordering).
inline bool admits_exceptional_ordering(const Collection& coll) {
    const auto& P = coll.params();
    const auto& ms = coll.members();
    const size_t n = ms.size();
    for (const auto& m : ms)
        if (classify(P, m) != ObjectClass::Exceptional) return false;
    // hom-arrows i -> j must be acyclic; a topological order then works.
    std::vector<std::vector<size_t>> succ(n);
    std::vector<int> indeg(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (hom_dim_orbit(P, ms[i], ms[j]) != 0) {
                succ[i].push_back(j);
                ++indeg[j];
            }
        }
    std::vector<size_t> queue;
    for (size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) queue.push_back(i);
    size_t done = 0;
    while (!queue.empty()) {
        size_t u = queue.back();
        queue.pop_back();
        ++done;
        for (size_t v : succ[u])
            if (--indeg[v] == 0) queue.push_back(v);
    }
    return done == n;
}

/// The ordering itself, when one exists: indices such that
/// hom_dim_orbit(later, earlier) = 0.
inline std::optional<std::vector<size_t>> exceptional_ordering(const Collection& coll) {
    const auto& P = coll.params();
    const auto& ms = coll.members();
    const size_t n = ms.size();
    for (const auto& m : ms)
        if (classify(P, m) != ObjectClass::Exceptional) return std::nullopt;
    std::vector<std::vector<size_t>> succ(n);
    std::vector<int> indeg(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && hom_dim_orbit(P, ms[i], ms[j]) != 0) {
                succ[i].push_back(j);
                ++indeg[j];
            }
    std::vector<size_t> order, queue;
    for (size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) queue.push_back(i);
    std::sort(queue.begin(), queue.end());
    while (!queue.empty()) {
        size_t u = queue.front();
        queue.erase(queue.begin());
        order.push_back(u);
        for (size_t v : succ[u])
            if (--indeg[v] == 0) queue.push_back(v);
        std::sort(queue.begin(), queue.end());
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

/// The orthogonalization procedure of Lemma mutatetoexcept: mutate arcs past
/// the Z-member, at each of its end points in cut order, until no orbit hom
/// from Z remains; returns the new collection and an exceptional ordering.
struct MutateToExceptionalResult {
    Collection collection;
    std::vector<size_t> ordering;
};

inline MutateToExceptionalResult mutate_to_exceptional(const Collection& coll_in) {
    const auto& P = coll_in.params();
    bool has_z = std::any_of(coll_in.members().begin(), coll_in.members().end(),
                             [](const IndecObject& m) { return m.family == Family::Z; });
    if (!coll_in.is_arc_collection() || !coll_in.is_reduced() || !has_z)
        throw domain_error("mutate_to_exceptional: need a reduced arc-collection with a Z member");
    Collection coll = coll_in;
    // the designated Z-arc: fixed once, never replaced by the left mutations
    Arc z_arc;
    for (size_t k = 0; k < coll.size(); ++k)
        if (coll.arcs()[k].from.side != coll.arcs()[k].to.side) { z_arc = coll.arcs()[k]; break; }
    long long budget = 16 * static_cast<long long>(coll.size() + 2) *
                       static_cast<long long>(coll.size() + 2);
    for (long long step = 0;; ++step) {
        if (step > budget) throw domain_error("mutate_to_exceptional: budget exceeded (diagnostic)");
        size_t z = coll.size();
        for (size_t k = 0; k < coll.size(); ++k)
            if (coll.arcs()[k] == z_arc) { z = k; break; }
        if (z == coll.size())
            throw internal_error("mutate_to_exceptional: designated Z arc disappeared");
        // find the cut-least offending co-incident arc at either end of alpha_Z
        std::optional<MutationMove> next;
        for (const MutationMove& mv : mutable_moves(coll)) {
            if (mv.a != z || mv.direction != MutationDirection::Left) continue;
            if (!next) next = mv;
            else if (mv.vertex == next->vertex &&
                     cut_less(mv.ray_b.far, next->ray_b.far, {mv.vertex, 0}))
                next = mv;
        }
        if (!next) break;
        coll = mutate(coll, *next);
    }
    auto order = exceptional_ordering(coll);
    if (!order)
        throw internal_error("mutate_to_exceptional: result admits no exceptional ordering");
    return {coll, *order};
}

} // namespace ddc
