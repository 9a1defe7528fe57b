#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "cones.hpp"
#include "geometry.hpp"
#include "groupoid.hpp"
#include "homs.hpp"
#include "objects.hpp"

namespace ddc {

/// A finite set of indecomposables stored as canonical Sigma-representatives,
/// with the derived arcs and cached validity flags.
class Collection {
public:
    Collection(const CategoryParams& P, std::vector<IndecObject> members) : params_(P) {
        std::set<IndecObject> seen;
        for (const IndecObject& m : members) {
            IndecObject c = canonical_rep(P, m);
            if (seen.insert(c).second) members_.push_back(c);
        }
        std::sort(members_.begin(), members_.end());
        for (const IndecObject& m : members_) arcs_.push_back(arc_of(P, m));
        validate();
    }

    static Collection from_arcs(const CategoryParams& P, const std::vector<Arc>& arcs) {
        std::vector<IndecObject> objs;
        objs.reserve(arcs.size());
        for (const Arc& a : arcs) objs.push_back(object_of(P, a));
        return Collection(P, std::move(objs));
    }

    const CategoryParams& params() const { return params_; }
    const std::vector<IndecObject>& members() const { return members_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    size_t size() const { return members_.size(); }
    bool is_arc_collection() const { return is_arc_collection_; }
    bool is_reduced() const { return is_reduced_; }
    std::optional<std::pair<size_t, size_t>> offending_pair() const { return offending_pair_; }
    std::optional<size_t> redundant_member() const { return redundant_member_; }

    SubgroupoidDescriptor descriptor() const { return generated_subgroupoid(params_, arcs_); }

    bool operator==(const Collection& o) const {
        return params_ == o.params_ && members_ == o.members_;
    }
    bool operator<(const Collection& o) const { return arcs_ < o.arcs_; }

private:
    void validate() {
        is_arc_collection_ = true;
        for (size_t i = 0; i < arcs_.size() && is_arc_collection_; ++i)
            for (size_t j = i; j < arcs_.size(); ++j) {
                bool geometric = arcs_cross(arcs_[i], arcs_[j]);
                bool algebraic = factoring_dim_orbit(params_, members_[i], members_[j]) > 0;
                if (geometric != algebraic)
                    throw internal_error("collection: geometric and algebraic crossing tests disagree");
                if (geometric) {
                    is_arc_collection_ = false;
                    offending_pair_ = {i, j};
                    break;
                }
            }
        is_reduced_ = is_arc_collection_;
        if (is_arc_collection_) {
            for (size_t i = 0; i < arcs_.size(); ++i) {
                std::vector<Arc> rest;
                for (size_t j = 0; j < arcs_.size(); ++j)
                    if (j != i) rest.push_back(arcs_[j]);
                if (generated_subgroupoid(params_, rest).contains(arcs_[i])) {
                    is_reduced_ = false;
                    redundant_member_ = i;
                    break;
                }
            }
        }
    }

    CategoryParams params_;
    std::vector<IndecObject> members_;
    std::vector<Arc> arcs_;
    bool is_arc_collection_ = false;
    bool is_reduced_ = false;
    std::optional<std::pair<size_t, size_t>> offending_pair_;
    std::optional<size_t> redundant_member_;
};

/// True iff no morphism between (shifts of) the objects factors through
/// tau^{-1} of its source; equivalently no pair of the arcs has an interior
/// intersection. Both routes are computed and asserted equal.
inline bool is_arc_collection(const CategoryParams& P, const std::vector<IndecObject>& objs) {
    return Collection(P, objs).is_arc_collection();
}

/// A is in the thick subcategory generated by coll, decided in the groupoid.
inline bool membership(const CategoryParams& P, const IndecObject& A, const Collection& coll) {
    if (!coll.is_arc_collection())
        throw domain_error("membership: collection is not an arc-collection");
    return coll.descriptor().contains(arc_of(P, A));
}

/// Membership together with a witness path of collection arcs.
inline std::optional<std::vector<PathStep>> membership_witness(const CategoryParams& P,
                                                               const IndecObject& A,
                                                               const Collection& coll) {
    if (!coll.is_arc_collection())
        throw domain_error("membership: collection is not an arc-collection");
    return witness_path(P, coll.arcs(), arc_of(P, A));
}

inline bool is_reduced(const Collection& coll) {
    if (!coll.is_arc_collection())
        throw domain_error("is_reduced: collection is not an arc-collection");
    return coll.is_reduced();
}

/// Deterministic reduction: repeatedly drop the canonically least redundant
/// member. The generated subgroupoid is unchanged.
inline Collection reduce(const Collection& coll) {
    if (!coll.is_arc_collection())
        throw domain_error("reduce: collection is not an arc-collection");
    Collection cur = coll;
    while (!cur.is_reduced()) {
        std::vector<IndecObject> next = cur.members();
        next.erase(next.begin() + static_cast<long>(*cur.redundant_member()));
        cur = Collection(cur.params(), next);
    }
    return cur;
}

/// Lemma-genset splitting: a tall X- or Y-object generates the same thick
/// subcategory as two spherelike objects of maximal spherelike height.
inline std::pair<IndecObject, IndecObject> generator_split(const CategoryParams& P,
                                                           const IndecObject& A) {
    if (A.family == Family::X) {
        if (height(A) < P.p())
            throw domain_error("generator_split: X height must be at least r+m");
        return {make_object(P, Family::X, A.c, A.j + 1, A.j + P.p()),
                make_object(P, Family::X, A.c, A.i, A.i + P.p() - 1)};
    }
    if (A.family == Family::Y) {
        if (height(A) < P.q())
            throw domain_error("generator_split: Y height must be at least n-r");
        return {make_object(P, Family::Y, A.c, A.i + P.q(), A.i + 1),
                make_object(P, Family::Y, A.c, A.j + P.q() - 1, A.j)};
    }
    throw domain_error("generator_split: Z objects are exceptional, nothing to split");
}

namespace arcifydetail {

inline bool is_tall(const CategoryParams& P, const IndecObject& A) {
    if (A.family == Family::X) return height(A) >= P.p();
    if (A.family == Family::Y) return height(A) >= P.q();
    return false;
}

// A crossing between two members, witnessed by a strict statement for
// (src, dst) where dst is a shift of the member to drop; the kept member is
// the one of minimal height, mirroring the induction of the reduction
// theorem (Z objects rank above all X/Y heights).
struct Crossing {
    IndecObject src;
    IndecObject dst;
    int stmt;
    size_t drop_index;
    long long kept_rank;
};

inline long long crossing_rank(const IndecObject& o) {
    return o.family == Family::Z ? (1LL << 40) : height(o);
}

inline std::optional<Crossing> find_crossing(const CategoryParams& P,
                                             const std::vector<IndecObject>& objs) {
    std::vector<Arc> arcs;
    for (const auto& o : objs) arcs.push_back(arc_of(P, o));
    std::optional<Crossing> best;
    for (size_t a = 0; a < objs.size(); ++a)
        for (size_t b = a; b < objs.size(); ++b) {
            if (!arcs_cross(arcs[a], arcs[b])) continue;
            size_t keep = crossing_rank(objs[a]) <= crossing_rank(objs[b]) ? a : b;
            size_t drop = a + b - keep;
            if (a == b)
                throw domain_error("arcify: member with a self-crossing arc cannot be resolved");
            long long kept_rank = crossing_rank(objs[keep]);
            if (best && best->kept_rank <= kept_rank) continue;
            // Find a concrete strict-statement witness with an explicit
            // shift; one exists in both directions, use the one keeping
            // `keep` as the untouched end of the triangle.
            long long span = std::abs(objs[a].i) + std::abs(objs[a].j) + std::abs(objs[b].i) +
                             std::abs(objs[b].j) + P.p() + P.q();
            long long K = P.r * (span / std::min(P.p(), P.q()) + 4) + 2 * P.r;
            std::optional<Crossing> witness;
            for (long long k = -K; k <= K && !witness; ++k) {
                IndecObject shifted = shift(P, objs[drop], k);
                for (const HomStatement& s : satisfied_statements(P, objs[keep], shifted))
                    if (s.strict) {
                        witness = Crossing{objs[keep], shifted, s.id, drop, kept_rank};
                        break;
                    }
                if (witness) break;
                for (const HomStatement& s : satisfied_statements(P, shifted, objs[keep]))
                    if (s.strict) {
                        witness = Crossing{shifted, objs[keep], s.id, drop, kept_rank};
                        break;
                    }
            }
            if (!witness)
                throw internal_error("arcify: crossing without a strict-statement witness");
            best = witness;
        }
    return best;
}

} // namespace arcifydetail

/// Turns any finite set of indecomposables into a reduced arc-collection
/// generating the same thick subcategory: tall members are split via
/// generator_split, crossings are resolved by replacing the target of a
/// minimal-height strict morphism with its cone summands, and the result is
/// reduced. A step budget guards the resolution loop.
inline Collection arcify(const CategoryParams& P, const std::vector<IndecObject>& objs_in) {
    std::vector<IndecObject> objs;
    long long total_height = 0;
    for (const IndecObject& o : objs_in) {
        if (o.family != Family::Z) total_height += height(o);
        objs.push_back(canonical_rep(P, o));
    }
    long long budget = 10 * (total_height + static_cast<long long>(objs_in.size()) + 2) *
                       (total_height + static_cast<long long>(objs_in.size()) + 2);
    auto dedupe = [&]() {
        std::set<IndecObject> s(objs.begin(), objs.end());
        objs.assign(s.begin(), s.end());
    };
    for (long long step = 0;; ++step) {
        if (step > budget)
            throw domain_error("arcify: resolution budget exceeded (diagnostic)");
        bool split_any = false;
        for (size_t k = 0; k < objs.size(); ++k) {
            if (arcifydetail::is_tall(P, objs[k])) {
                auto [a1, a2] = generator_split(P, objs[k]);
                objs.erase(objs.begin() + static_cast<long>(k));
                objs.push_back(canonical_rep(P, a1));
                objs.push_back(canonical_rep(P, a2));
                split_any = true;
                break;
            }
        }
        if (split_any) { dedupe(); continue; }
        auto crossing = arcifydetail::find_crossing(P, objs);
        if (!crossing) break;
        ConeResult cone = cone_of(P, crossing->src, crossing->dst, crossing->stmt);
        objs.erase(objs.begin() + static_cast<long>(crossing->drop_index));
        for (const IndecObject& s : cone.summands) objs.push_back(canonical_rep(P, s));
        dedupe();
    }
    return reduce(Collection(P, objs));
}

} // namespace ddc
