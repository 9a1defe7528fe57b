#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "collections.hpp"
#include "groupoid.hpp"
#include "mutation.hpp"

namespace ddc {

struct EnumerationBounds {
    long long max_winding = 1;
    size_t max_arcs = 0; // 0: use the default p+q+1

    size_t effective_max_arcs(const CategoryParams& P) const {
        return max_arcs ? max_arcs : static_cast<size_t>(P.p() + P.q() + 1);
    }
};

/// Every canonical arc with |w| <= W whose object is exceptional or
/// spherelike (arcs with self-intersections cannot appear in non-crossing
/// configurations), in canonical order.
inline std::vector<Arc> arc_universe(const CategoryParams& P, long long W) {
    std::vector<Arc> out;
    auto consider = [&](const Arc& a) {
        IndecObject o = object_of(P, a);
        if (classify(P, o) != ObjectClass::Neither) out.push_back(a);
    };
    for (long long w = -W; w <= W; ++w) {
        for (int s = 1; s <= P.p(); ++s) {
            for (int e = 1; e <= P.p(); ++e)
                if (w > 0 || (w == 0 && s < e)) consider({{Side::X, s}, {Side::X, e}, w});
            for (int e = 1; e <= P.q(); ++e) consider({{Side::X, s}, {Side::Y, e}, w});
        }
        for (int s = 1; s <= P.q(); ++s)
            for (int e = 1; e <= P.q(); ++e)
                if (w < 0 || (w == 0 && s < e)) consider({{Side::Y, s}, {Side::Y, e}, w});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All reduced non-crossing configurations within the bounds, generated by
/// incremental extension over the arc universe with crossing pruning;
/// reducedness is checked on emission. The empty configuration is included.
inline std::vector<Collection> enumerate_configurations(const CategoryParams& P,
                                                        const EnumerationBounds& bounds) {
    std::vector<Arc> universe = arc_universe(P, bounds.max_winding);
    const size_t cap = bounds.effective_max_arcs(P);
    std::vector<Collection> out;
    std::vector<Arc> stack;
    auto emit = [&]() {
        Collection c = Collection::from_arcs(P, stack);
        if (!c.is_arc_collection())
            throw internal_error("enumerate_configurations: pruning admitted a crossing");
        if (c.is_reduced()) out.push_back(c);
    };
    auto rec = [&](auto&& self, size_t from) -> void {
        emit();
        if (stack.size() >= cap) return;
        for (size_t k = from; k < universe.size(); ++k) {
            bool ok = true;
            for (const Arc& a : stack)
                if (arcs_cross(a, universe[k])) { ok = false; break; }
            if (!ok) continue;
            stack.push_back(universe[k]);
            self(self, k + 1);
            stack.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Canonical printable encoding of a descriptor, used as a grouping key.
inline std::string descriptor_key(const SubgroupoidDescriptor& D) {
    std::ostringstream os;
    for (size_t k = 0; k < D.points.size(); ++k)
        os << D.points[k].str() << "=b" << D.block[k] << "w" << D.base[k] << ";";
    os << "|";
    for (long long g : D.period) os << g << ",";
    return os.str();
}

/// A thick-subcategory class: a descriptor with the enumerated
/// configurations generating it.
struct ThickClass {
    SubgroupoidDescriptor descriptor;
    std::vector<Collection> representatives;
    bool exceptional = false; // some representative admits an exceptional ordering
    bool z_family = false;    // set by rotation_quotient for collapsed Z-orbits
};

inline std::vector<ThickClass> thick_classes(const std::vector<Collection>& configs) {
    std::map<std::string, ThickClass> by_key;
    for (const Collection& c : configs) {
        SubgroupoidDescriptor d = c.descriptor();
        std::string key = descriptor_key(d);
        auto [it, fresh] = by_key.try_emplace(key);
        if (fresh) it->second.descriptor = d;
        it->second.representatives.push_back(c);
        if (!it->second.exceptional && admits_exceptional_ordering(c))
            it->second.exceptional = true;
    }
    std::vector<ThickClass> out;
    for (auto& [key, cls] : by_key) out.push_back(std::move(cls));
    return out;
}

/// Containment of thick classes via generator arcs of representatives.
inline bool class_leq(const ThickClass& a, const ThickClass& b) {
    return groupoid_leq(b.descriptor, a.representatives.front().arcs());
}

/// Cover relations of the containment order, by transitive reduction.
inline std::vector<std::pair<size_t, size_t>> hasse(const std::vector<ThickClass>& classes) {
    const size_t n = classes.size();
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && class_leq(classes[i], classes[j]) && !class_leq(classes[j], classes[i]))
                lt[i][j] = true;
    std::vector<std::pair<size_t, size_t>> covers;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!lt[i][j]) continue;
            bool cover = true;
            for (size_t k = 0; k < n && cover; ++k)
                if (lt[i][k] && lt[k][j]) cover = false;
            if (cover) covers.push_back({i, j});
        }
    return covers;
}

// ---------------------------------------------------------------------------
// Rotation quotient: the Z-action adding k to the winding of every
// boundary-crossing arc.
// ---------------------------------------------------------------------------

inline Arc rotate_arc(const Arc& a, long long k) {
    if (a.from.side == a.to.side) return a;
    return {a.from, a.to, a.w + k};
}

inline std::vector<Arc> rotate_arcs(const std::vector<Arc>& arcs, long long k) {
    std::vector<Arc> out;
    out.reserve(arcs.size());
    for (const Arc& a : arcs) out.push_back(rotate_arc(a, k));
    std::sort(out.begin(), out.end());
    return out;
}

/// True iff the class belongs to an infinite rotation orbit: some block of
/// its descriptor joins the two boundaries with period 0.
inline bool is_z_family(const CategoryParams& P, const SubgroupoidDescriptor& D) {
    for (size_t bid = 0; bid < D.period.size(); ++bid) {
        if (D.period[bid] != 0) continue;
        bool has_x = false, has_y = false;
        for (size_t k = 0; k < D.points.size(); ++k)
            if (static_cast<size_t>(D.block[k]) == bid) {
                (D.points[k].side == Side::X ? has_x : has_y) = true;
            }
        if (has_x && has_y) return true;
    }
    return false;
}

/// Canonical key of the rotation orbit of a configuration's descriptor.
/// Infinite orbits are anchored by normalizing the first mixed free block;
/// finite orbits take the minimum over one period of the action.
inline std::string rotation_orbit_key(const CategoryParams& P, const Collection& rep) {
    auto desc_of = [&](long long k) {
        return generated_subgroupoid(P, rotate_arcs(rep.arcs(), k));
    };
    SubgroupoidDescriptor D0 = desc_of(0);
    if (is_z_family(P, D0)) {
        // find k aligning the first Y point of the first mixed free block to base 0
        for (size_t bid = 0; bid < D0.period.size(); ++bid) {
            if (D0.period[bid] != 0) continue;
            bool has_x = false;
            long long y_base = 0;
            bool has_y = false;
            for (size_t k = 0; k < D0.points.size(); ++k) {
                if (static_cast<size_t>(D0.block[k]) != bid) continue;
                if (D0.points[k].side == Side::X) has_x = true;
                else if (!has_y) { has_y = true; y_base = D0.base[k]; }
            }
            if (has_x && has_y) {
                // rooted on the X side, rotating by k shifts the block's Y
                // bases by exactly k, so k = -y_base anchors the orbit
                SubgroupoidDescriptor Dk = desc_of(-y_base);
                for (size_t t = 0; t < Dk.points.size(); ++t)
                    if (static_cast<size_t>(Dk.block[t]) == bid && Dk.points[t].side == Side::Y) {
                        if (Dk.base[t] != 0)
                            throw internal_error("rotation_orbit_key: Z-family anchor failed");
                        break;
                    }
                return "Z|" + descriptor_key(Dk);
            }
        }
    }
    // finite orbit: minimum over one lcm period of the mixed-block periods
    long long L = 1;
    for (size_t bid = 0; bid < D0.period.size(); ++bid) {
        if (D0.period[bid] == 0) continue;
        bool has_x = false, has_y = false;
        for (size_t k = 0; k < D0.points.size(); ++k)
            if (static_cast<size_t>(D0.block[k]) == bid)
                (D0.points[k].side == Side::X ? has_x : has_y) = true;
        if (has_x && has_y) L = std::lcm(L, D0.period[bid]);
    }
    std::string best;
    for (long long k = 0; k < L; ++k) {
        std::string key = descriptor_key(desc_of(k));
        if (best.empty() || key < best) best = key;
    }
    return "F|" + best;
}

/// Groups classes into rotation orbits; Z-families collapse to one class
/// each (flagged), finite orbits merge their class data.
inline std::vector<ThickClass> rotation_quotient(const std::vector<ThickClass>& classes,
                                                 const CategoryParams& P) {
    std::map<std::string, ThickClass> by_orbit;
    for (const ThickClass& cls : classes) {
        std::string key = rotation_orbit_key(P, cls.representatives.front());
        auto [it, fresh] = by_orbit.try_emplace(key);
        if (fresh) {
            it->second.descriptor = cls.descriptor;
            it->second.z_family = is_z_family(P, cls.descriptor);
        }
        for (const Collection& c : cls.representatives) it->second.representatives.push_back(c);
        if (cls.exceptional) it->second.exceptional = true;
    }
    std::vector<ThickClass> out;
    for (auto& [key, cls] : by_orbit) {
        std::sort(cls.representatives.begin(), cls.representatives.end());
        out.push_back(std::move(cls));
    }
    return out;
}

// ---------------------------------------------------------------------------
// DOT output.
// ---------------------------------------------------------------------------

/// Longest-chain rank of every class from the minimal elements.
inline std::vector<int> class_ranks(size_t n, const std::vector<std::pair<size_t, size_t>>& covers) {
    std::vector<int> rank(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [lo, hi] : covers)
            if (rank[hi] < rank[lo] + 1) {
                rank[hi] = rank[lo] + 1;
                changed = true;
            }
    }
    return rank;
}

/// Deterministic DOT for a Hasse diagram, ranked by longest chain from the
/// bottom.
inline std::string render_dot(const std::vector<ThickClass>& classes,
                              const std::vector<std::pair<size_t, size_t>>& covers) {
    std::vector<int> rank = class_ranks(classes.size(), covers);
    int max_rank = 0;
    for (int r : rank) max_rank = std::max(max_rank, r);
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=ellipse];\n";
    for (size_t k = 0; k < classes.size(); ++k) {
        os << "  c" << k << " [label=\"" << k;
        if (classes[k].exceptional) os << "*";
        if (classes[k].z_family) os << " (Z)";
        os << "\"];\n";
    }
    for (int r = 0; r <= max_rank; ++r) {
        os << "  { rank=same;";
        for (size_t k = 0; k < classes.size(); ++k)
            if (rank[k] == r) os << " c" << k << ";";
        os << " }\n";
    }
    for (auto [lo, hi] : covers) os << "  c" << lo << " -> c" << hi << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace ddc
