#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "objects.hpp"

namespace ddc {

/// A lift of a marked point to the universal cover; `level` is the index of
/// the fundamental domain under the deck transformation sigma.
struct LiftedPoint {
    MarkedPoint pt;
    long long level = 0;

    auto operator<=>(const LiftedPoint&) const = default;

    std::string str() const {
        return "(" + pt.str() + "," + std::to_string(level) + ")";
    }
};

/// Total order on the lifts of one boundary. On the X side lifts increase
/// with (level, idx); on the Y side with (-level, idx).
inline bool boundary_less(const LiftedPoint& a, const LiftedPoint& b) {
    if (a.pt.side != b.pt.side) throw domain_error("boundary_less: points on different boundaries");
    if (a.pt.side == Side::X)
        return std::tuple(a.level, a.pt.idx) < std::tuple(b.level, b.pt.idx);
    return std::tuple(-a.level, a.pt.idx) < std::tuple(-b.level, b.pt.idx);
}

inline bool boundary_leq(const LiftedPoint& a, const LiftedPoint& b) {
    return a == b || boundary_less(a, b);
}

struct LiftedArc {
    LiftedPoint a;
    LiftedPoint b;

    auto operator<=>(const LiftedArc&) const = default;
};

/// The canonical lift of a canonical arc: (from,0) -> (to,w).
inline LiftedArc lift(const Arc& alpha) {
    return {{alpha.from, 0}, {alpha.to, alpha.w}};
}

inline LiftedPoint deck(const LiftedPoint& u, long long k) { return {u.pt, u.level + k}; }
inline LiftedArc deck(const LiftedArc& l, long long k) { return {deck(l.a, k), deck(l.b, k)}; }

inline LiftedArc reverse(const LiftedArc& l) { return {l.b, l.a}; }

/// Canonical arc of a lifted pair of endpoints (orientation-free).
inline Arc arc_from_lift(const LiftedArc& l) {
    LiftedPoint a = l.a, b = l.b;
    bool swap;
    if (a.pt.side == b.pt.side) {
        if (a == b) throw domain_error("arc_from_lift: degenerate (contractible) arc");
        swap = !boundary_less(a, b);
    } else {
        swap = a.pt.side == Side::Y;
    }
    if (swap) std::swap(a, b);
    return {a.pt, b.pt, b.level - a.level};
}

namespace detail {

// One comparison u REL v on a named boundary; fails unless both points lie
// on that boundary.
inline bool on(const LiftedPoint& u, Side s) { return u.pt.side == s; }

inline bool cmp_on(const LiftedPoint& u, const LiftedPoint& v, Side s, bool strict, bool force_strict) {
    if (!on(u, s) || !on(v, s)) return false;
    return (strict || force_strict) ? boundary_less(u, v) : boundary_leq(u, v);
}

} // namespace detail

/// The ten endpoint-order patterns deciding whether two lifted arcs in
/// canonical parametrisation intersect. Returns the pattern id, or nullopt.
/// With `all_strict` every inequality is required to be strict, which detects
/// interior (non-endpoint) intersections.
inline std::optional<int> lift_pattern(const LiftedArc& a1, const LiftedArc& a2, bool all_strict = false) {
    using detail::cmp_on;
    using detail::on;
    const auto& A1 = a1.a; const auto& B1 = a1.b;
    const auto& A2 = a2.a; const auto& B2 = a2.b;
    const bool fs = all_strict;
    // 0: a1 <= a2 < b1 <= b2 in X
    if (cmp_on(A1, A2, Side::X, false, fs) && cmp_on(A2, B1, Side::X, true, fs) &&
        cmp_on(B1, B2, Side::X, false, fs))
        return 0;
    // 1: a2 < a1 <= b2 < b1 in X
    if (cmp_on(A2, A1, Side::X, true, fs) && cmp_on(A1, B2, Side::X, false, fs) &&
        cmp_on(B2, B1, Side::X, true, fs))
        return 1;
    // 2: a1 <= a2 < b1 in X, b2 in Y
    if (cmp_on(A1, A2, Side::X, false, fs) && cmp_on(A2, B1, Side::X, true, fs) && on(B2, Side::Y))
        return 2;
    // 3: a2 < a1 <= b2 in X, b1 in Y
    if (cmp_on(A2, A1, Side::X, true, fs) && cmp_on(A1, B2, Side::X, false, fs) && on(B1, Side::Y))
        return 3;
    // 4: a1 <= a2 in X, b1 <= b2 in Y
    if (cmp_on(A1, A2, Side::X, false, fs) && cmp_on(B1, B2, Side::Y, false, fs))
        return 4;
    // 5: a2 < a1 in X, b2 < b1 in Y
    if (cmp_on(A2, A1, Side::X, true, fs) && cmp_on(B2, B1, Side::Y, true, fs))
        return 5;
    // 6: a1 in X, a2 < b1 <= b2 in Y
    if (on(A1, Side::X) && cmp_on(A2, B1, Side::Y, true, fs) && cmp_on(B1, B2, Side::Y, false, fs))
        return 6;
    // 7: a2 in X, a1 <= b2 < b1 in Y
    if (on(A2, Side::X) && cmp_on(A1, B2, Side::Y, false, fs) && cmp_on(B2, B1, Side::Y, true, fs))
        return 7;
    // 8: a1 <= a2 < b1 <= b2 in Y
    if (cmp_on(A1, A2, Side::Y, false, fs) && cmp_on(A2, B1, Side::Y, true, fs) &&
        cmp_on(B1, B2, Side::Y, false, fs))
        return 8;
    // 9: a2 < a1 <= b2 < b1 in Y
    if (cmp_on(A2, A1, Side::Y, true, fs) && cmp_on(A1, B2, Side::Y, false, fs) &&
        cmp_on(B2, B1, Side::Y, true, fs))
        return 9;
    return std::nullopt;
}

inline int lift_intersection(const LiftedArc& a1, const LiftedArc& a2) {
    return lift_pattern(a1, a2).has_value() ? 1 : 0;
}

namespace detail {

// Solutions k of: fixed REL (moving translated by sigma^k), as a half-line
// in k. X-side lifts grow with level, Y-side lifts shrink.
struct KRange {
    long long lo, hi; // inclusive; full range = [MIN_SENTINEL, MAX_SENTINEL]
    static constexpr long long NEG = -(1LL << 62);
    static constexpr long long POS = (1LL << 62);

    static KRange all() { return {NEG, POS}; }
    static KRange empty() { return {1, 0}; }
    bool is_empty() const { return lo > hi; }
    KRange meet(const KRange& o) const { return {std::max(lo, o.lo), std::min(hi, o.hi)}; }
    long long count() const { return is_empty() ? 0 : hi - lo + 1; }
};

// Range of k with  u REL deck(v, k)  (or  deck(v,k) REL u  when moving_left).
inline KRange k_range(const LiftedPoint& fixed, const LiftedPoint& moving, Side side, bool strict,
                      bool moving_is_lhs) {
    if (fixed.pt.side != side || moving.pt.side != side) return KRange::empty();
    // Compare key(fixed) vs key(moving)+k on a line where key grows with k on
    // the X side and shrinks on the Y side. Work with key = level and break
    // ties by idx.
    // fixed REL moving(k):
    //   X: (f.level, f.idx) REL (m.level + k, m.idx)
    //   Y: (-f.level, f.idx) REL (-(m.level + k), m.idx)
    long long diff = fixed.level - moving.level; // the k making levels equal
    bool idx_lt = fixed.pt.idx < moving.pt.idx;
    bool idx_eq = fixed.pt.idx == moving.pt.idx;
    // Resolve "fixed < moving(k)" on the X side:
    //   true iff k > diff, or k == diff and f.idx < m.idx.
    // On the Y side the level comparison flips: true iff k < diff, or equal
    // levels with f.idx < m.idx.
    auto lt_fixed_moving = [&](bool strict_) -> KRange {
        long long boundary;
        if (side == Side::X) {
            // fixed <(=) moving(k): k >= diff + delta
            if (strict_) boundary = idx_lt ? diff : diff + 1;
            else boundary = (idx_lt || idx_eq) ? diff : diff + 1;
            return {boundary, KRange::POS};
        }
        if (strict_) boundary = idx_lt ? diff : diff - 1;
        else boundary = (idx_lt || idx_eq) ? diff : diff - 1;
        return {KRange::NEG, boundary};
    };
    auto lt_moving_fixed = [&](bool strict_) -> KRange {
        bool idx_gt = fixed.pt.idx > moving.pt.idx;
        long long boundary;
        if (side == Side::X) {
            // moving(k) <(=) fixed: k <= diff - delta
            if (strict_) boundary = idx_gt ? diff : diff - 1;
            else boundary = (idx_gt || idx_eq) ? diff : diff - 1;
            return {KRange::NEG, boundary};
        }
        if (strict_) boundary = idx_gt ? diff : diff + 1;
        else boundary = (idx_gt || idx_eq) ? diff : diff + 1;
        return {boundary, KRange::POS};
    };
    return moving_is_lhs ? lt_moving_fixed(strict) : lt_fixed_moving(strict);
}

} // namespace detail

/// Number of deck translates sigma^k a2 realizing a given pattern against a1,
/// counted exactly (each pattern's inequalities are affine in k).
inline long long pattern_count(const LiftedArc& a1, const LiftedArc& a2, int pattern,
                               bool all_strict = false) {
    using detail::KRange;
    using detail::k_range;
    const auto& A1 = a1.a; const auto& B1 = a1.b;
    const auto& A2 = a2.a; const auto& B2 = a2.b;
    auto fixed_on = [&](const LiftedPoint& u, Side s) { return u.pt.side == s; };
    const bool fs = all_strict;
    KRange r = KRange::all();
    auto need = [&](const LiftedPoint& fixed, const LiftedPoint& moving, Side s, bool strict,
                    bool moving_lhs) { r = r.meet(k_range(fixed, moving, s, strict || fs, moving_lhs)); };
    switch (pattern) {
        case 0:
            need(A1, A2, Side::X, false, false);
            need(B1, A2, Side::X, true, true);
            need(B1, B2, Side::X, false, false);
            break;
        case 1:
            need(A1, A2, Side::X, true, true);
            need(A1, B2, Side::X, false, false);
            need(B1, B2, Side::X, true, true);
            break;
        case 2:
            if (!fixed_on(B2, Side::Y)) return 0;
            need(A1, A2, Side::X, false, false);
            need(B1, A2, Side::X, true, true);
            break;
        case 3:
            if (!fixed_on(B1, Side::Y)) return 0;
            need(A1, A2, Side::X, true, true);
            need(A1, B2, Side::X, false, false);
            break;
        case 4:
            need(A1, A2, Side::X, false, false);
            need(B1, B2, Side::Y, false, false);
            break;
        case 5:
            need(A1, A2, Side::X, true, true);
            need(B1, B2, Side::Y, true, true);
            break;
        case 6:
            if (!fixed_on(A1, Side::X)) return 0;
            need(B1, A2, Side::Y, true, true);
            need(B1, B2, Side::Y, false, false);
            break;
        case 7:
            if (!fixed_on(A2, Side::X)) return 0;
            // a2 itself moves but only its side matters here.
            need(A1, B2, Side::Y, false, false);
            need(B1, B2, Side::Y, true, true);
            break;
        case 8:
            need(A1, A2, Side::Y, false, false);
            need(B1, A2, Side::Y, true, true);
            need(B1, B2, Side::Y, false, false);
            break;
        case 9:
            need(A1, A2, Side::Y, true, true);
            need(A1, B2, Side::Y, false, false);
            need(B1, B2, Side::Y, true, true);
            break;
        default:
            throw domain_error("pattern_count: pattern id out of range");
    }
    return r.count();
}

/// iota(alpha1, alpha2): the lift-sum intersection number, computed exactly.
inline long long intersection_number(const Arc& a1, const Arc& a2) {
    LiftedArc l1 = lift(a1), l2 = lift(a2);
    long long total = 0;
    for (int c = 0; c < 10; ++c) total += pattern_count(l1, l2, c);
    return total;
}

/// 1 iff some deck translate of a2's lift meets a1's lift away from common
/// endpoints (an all-strict pattern).
inline bool arcs_cross(const Arc& a1, const Arc& a2) {
    LiftedArc l1 = lift(a1), l2 = lift(a2);
    for (int c = 0; c < 10; ++c)
        if (pattern_count(l1, l2, c, true) > 0) return true;
    return false;
}

// ---------------------------------------------------------------------------
// The cut order at a vertex of the disc model.
//
// The boundary cyclic order of the disc is: all X-side lifts ascending, the
// X-side puncture, all Y-side lifts ascending (level descending), the Y-side
// puncture, and around again.
// ---------------------------------------------------------------------------

namespace detail {

// Linear position in one full traversal of the cycle, as an orderable key.
// sector 0 = X lifts, sector 1 = Y lifts (punctures never carry points).
struct CyclicKey {
    int sector;
    long long primary;
    int idx;

    auto operator<=>(const CyclicKey&) const = default;
};

inline CyclicKey cyclic_key(const LiftedPoint& u) {
    if (u.pt.side == Side::X) return {0, u.level, u.pt.idx};
    return {1, -u.level, u.pt.idx};
}

} // namespace detail

/// The linear order <_at obtained by cutting the boundary cyclic order of the
/// disc just after `at`.
inline bool cut_less(const LiftedPoint& u, const LiftedPoint& v, const LiftedPoint& at) {
    if (u == at || v == at) throw domain_error("cut_less: arguments must differ from the cut point");
    if (u == v) return false;
    auto ka = detail::cyclic_key(at), ku = detail::cyclic_key(u), kv = detail::cyclic_key(v);
    bool u_after = ka < ku; // u lies after the cut point within the linear sweep
    bool v_after = ka < kv;
    if (u_after != v_after) return u_after; // points after `at` come first
    return ku < kv;
}

/// An arc endpoint anchored at a lifted vertex: the unique lift of `arc`
/// placing one of its endpoints at the anchor, parametrised outward.
struct AnchoredRay {
    Arc arc;
    bool reversed = false; // true: the anchor is the arc's canonical `to` end
    LiftedPoint far;       // the other endpoint of the anchored lift

    auto operator<=>(const AnchoredRay&) const = default;
};

/// All lifts of `arc` with an endpoint at `at`, parametrised from `at`.
inline std::vector<AnchoredRay> rays_at(const Arc& arc, const LiftedPoint& at) {
    std::vector<AnchoredRay> out;
    if (arc.from == at.pt)
        out.push_back({arc, false, {arc.to, at.level + arc.w}});
    if (arc.to == at.pt)
        out.push_back({arc, true, {arc.from, at.level - arc.w}});
    return out;
}

/// The factoring arcs between two co-incident anchored rays: members of
/// `pool` with a lift from the same anchor whose far end lies strictly
/// between the two rays' far ends in the cut order.
inline std::vector<Arc> factoring_arcs(const AnchoredRay& ra, const AnchoredRay& rb,
                                       const LiftedPoint& at, const std::vector<Arc>& pool) {
    if (!cut_less(ra.far, rb.far, at))
        throw domain_error("factoring_arcs: rays are not in cut order at the vertex");
    std::vector<Arc> out;
    for (const Arc& g : pool) {
        for (const AnchoredRay& rg : rays_at(g, at)) {
            if (rg.far == at) continue; // cannot compare the anchor with itself
            if (cut_less(ra.far, rg.far, at) && cut_less(rg.far, rb.far, at)) {
                out.push_back(g);
                break;
            }
        }
    }
    return out;
}

/// Convenience overload on plain arcs sharing the marked point v: anchors
/// both at (v,0) using their unique rays. Requires unambiguous incidences
/// (neither arc a loop at v with both rays applicable in order).
inline std::vector<Arc> factoring_arcs(const Arc& a, const Arc& b, const MarkedPoint& v,
                                       const std::vector<Arc>& pool) {
    LiftedPoint at{v, 0};
    for (const AnchoredRay& ra : rays_at(a, at))
        for (const AnchoredRay& rb : rays_at(b, at))
            if (ra.far != rb.far && cut_less(ra.far, rb.far, at))
                return factoring_arcs(ra, rb, at, pool);
    throw domain_error("factoring_arcs: arcs do not meet in cut order at " + v.str());
}

/// Concatenation of two composable anchored rays: traverse `ra` into the
/// anchor, then `rb` out of it.
inline Arc concatenate(const AnchoredRay& ra, const AnchoredRay& rb) {
    return arc_from_lift({ra.far, rb.far});
}

/// Concatenation of alpha_a and alpha_b at the shared marked point v.
inline Arc concatenate(const Arc& a, const Arc& b, const MarkedPoint& v) {
    LiftedPoint at{v, 0};
    auto ras = rays_at(a, at);
    auto rbs = rays_at(b, at);
    if (ras.empty() || rbs.empty())
        throw domain_error("concatenate: arcs do not share the end point " + v.str());
    // For non-loop arcs the rays are unique; for loops prefer a
    // non-degenerate pairing.
    for (const auto& ra : ras)
        for (const auto& rb : rbs)
            if (ra.far != rb.far) return arc_from_lift({ra.far, rb.far});
    throw domain_error("concatenate: composite arc is contractible");
}

} // namespace ddc
