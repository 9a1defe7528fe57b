#pragma once

#include <compare>
#include <optional>
#include <string>
#include <tuple>

#include "params.hpp"

namespace ddc {

enum class Family { X, Y, Z };

inline char family_char(Family f) {
    switch (f) {
        case Family::X: return 'X';
        case Family::Y: return 'Y';
        default: return 'Z';
    }
}

/// An indecomposable object of D^b(Lambda(r,n,m)) in coordinate form.
/// X^c(i,j) requires j >= i, Y^c(i,j) requires i >= j, Z^c(i,j) is free.
struct IndecObject {
    Family family = Family::X;
    int c = 0;
    long long i = 0;
    long long j = 0;

    auto operator<=>(const IndecObject&) const = default;

    std::string str() const {
        return std::string(1, family_char(family)) + "^" + std::to_string(c) + "(" +
               std::to_string(i) + "," + std::to_string(j) + ")";
    }
};

/// An object of height 0 on the mouth of an X- or Y-component.
struct MouthObject {
    Family family = Family::X; // X or Y only
    int c = 0;
    long long v = 0; // the common coordinate i = j

    auto operator<=>(const MouthObject&) const = default;

    IndecObject object() const { return {family, c, v, v}; }
    std::string str() const { return object().str(); }
};

enum class Side { X, Y };

/// A marked point on one of the boundary circles of C(p,q); idx is 1-based.
struct MarkedPoint {
    Side side = Side::X;
    int idx = 1;

    auto operator<=>(const MarkedPoint&) const = default;

    std::string str() const {
        return (side == Side::X ? "x" : "y") + std::to_string(idx);
    }
};

/// A homotopy class of arc on C(p,q): two marked endpoints plus a winding.
/// Stored in canonical orientation: `from` on the X-side when the arc crosses,
/// and for one-boundary arcs the canonical lift of `from` precedes that of `to`.
struct Arc {
    MarkedPoint from;
    MarkedPoint to;
    long long w = 0;

    auto operator<=>(const Arc&) const = default;

    std::string str() const {
        return from.str() + ":" + to.str() + ":" + std::to_string(w);
    }
};

inline IndecObject make_object(const CategoryParams& P, Family f, int c, long long i, long long j) {
    if (c < 0 || c >= P.r) throw domain_error("make_object: component index out of range");
    if (f == Family::X && j < i) throw domain_error("make_object: X coordinates need j >= i");
    if (f == Family::Y && i < j) throw domain_error("make_object: Y coordinates need i >= j");
    return {f, c, i, j};
}

/// Sigma^k. Sigma increments the component index; each wrap-around past
/// component r-1 applies tau^{-(m+r)} on X, tau^{n-r} on Y and
/// (i,j) -> (i+p, j-q) on Z.
inline IndecObject shift(const CategoryParams& P, const IndecObject& A, long long k) {
    long long e = A.c + k;
    int c = static_cast<int>(floor_mod(e, P.r));
    long long t = floor_div(e, P.r); // net wrap count
    switch (A.family) {
        case Family::X: return {Family::X, c, A.i + t * P.p(), A.j + t * P.p()};
        case Family::Y: return {Family::Y, c, A.i - t * P.q(), A.j - t * P.q()};
        default:        return {Family::Z, c, A.i + t * P.p(), A.j - t * P.q()};
    }
}

/// tau^k: coordinates (i,j) -> (i-k, j-k), same family and component.
inline IndecObject ar_translate(const IndecObject& A, long long k) {
    return {A.family, A.c, A.i - k, A.j - k};
}

inline long long height(const IndecObject& A) {
    if (A.family == Family::X) return A.j - A.i;
    if (A.family == Family::Y) return A.i - A.j;
    throw domain_error("height: Z objects have no height");
}

inline bool is_mouth(const IndecObject& A) {
    return A.family != Family::Z && A.i == A.j;
}

inline MouthObject as_mouth(const IndecObject& A) {
    if (!is_mouth(A)) throw domain_error("as_mouth: object is not on a mouth");
    return {A.family, A.c, A.i};
}

/// The boundary pair of Lemma-endpoints form: B^-(A) is a mouth object and
/// B^+(A) = Sigma^{plus_shift} plus_mouth with plus_shift in {-1, 0}.
struct BoundaryPair {
    MouthObject minus;
    MouthObject plus_mouth;
    int plus_shift = 0;

    IndecObject plus(const CategoryParams& P) const {
        return shift(P, plus_mouth.object(), plus_shift);
    }
    IndecObject sigma_plus(const CategoryParams& P) const {
        return shift(P, plus_mouth.object(), plus_shift + 1);
    }
};

inline BoundaryPair boundary_pair(const CategoryParams& P, const IndecObject& A) {
    switch (A.family) {
        case Family::X:
            return {{Family::X, A.c, A.i}, {Family::X, A.c, A.j + 1}, -1};
        case Family::Y:
            return {{Family::Y, A.c, A.j}, {Family::Y, A.c, A.i + 1}, -1};
        default:
            return {{Family::X, A.c, A.i}, {Family::Y, A.c, A.j}, 0};
    }
}

/// Writes a mouth object uniquely as Sigma^k L with L in the fixed exceptional
/// cycles (X_s = X^0(s,s), s=1..p; Y_s = Y^0(s,s), s=1..q), returning
/// (eta(L), k).
inline std::pair<MarkedPoint, long long> mouth_decompose(const CategoryParams& P, const MouthObject& B) {
    if (B.family == Family::X) {
        long long t = floor_div(B.v - 1, P.p());
        int s = static_cast<int>(B.v - t * P.p());
        return {{Side::X, s}, t * P.r + B.c};
    }
    long long u = floor_div(B.v - 1, P.q());
    int s = static_cast<int>(B.v - u * P.q());
    return {{Side::Y, s}, -u * P.r + B.c};
}

/// b^-(A), b^+(A), k^-(A), k^+(A) in one record.
struct ArcData {
    MarkedPoint b_minus;
    MarkedPoint b_plus;
    long long k_minus = 0;
    long long k_plus = 0;
};

inline ArcData arc_data(const CategoryParams& P, const IndecObject& A) {
    BoundaryPair bp = boundary_pair(P, A);
    auto [lm, km] = mouth_decompose(P, bp.minus);
    auto [lp, kp] = mouth_decompose(P, bp.plus_mouth);
    return {lm, lp, km, kp + bp.plus_shift};
}

/// The arc of A: endpoints b^-(A), b^+(A) and winding
/// w = (k^+ - k^- + 1)/r on X/Y components, (k^+ - k^-)/r on Z.
inline Arc arc_of(const CategoryParams& P, const IndecObject& A) {
    ArcData d = arc_data(P, A);
    long long num = d.k_plus - d.k_minus + (A.family == Family::Z ? 0 : 1);
    if (floor_mod(num, P.r) != 0)
        throw internal_error("arc_of: winding not divisible by r for " + A.str());
    return {d.b_minus, d.b_plus, num / P.r};
}

/// Inverse of arc_of on canonical arcs: the unique representative with the
/// B^- summand in component 0 at shift exponent k^- = 0.
inline IndecObject object_of(const CategoryParams& P, const Arc& a) {
    long long s = a.from.idx, e = a.to.idx;
    if (a.from.side == Side::X && a.to.side == Side::X) {
        long long j = e + a.w * P.p() - 1;
        if (j < s) throw domain_error("object_of: arc is not in canonical orientation");
        return {Family::X, 0, s, j};
    }
    if (a.from.side == Side::Y && a.to.side == Side::Y) {
        long long i = e - a.w * P.q() - 1;
        if (i < s) throw domain_error("object_of: arc is not in canonical orientation");
        return {Family::Y, 0, i, s};
    }
    if (a.from.side == Side::X && a.to.side == Side::Y)
        return {Family::Z, 0, s, e - a.w * P.q()};
    throw domain_error("object_of: arc is not in canonical orientation");
}

/// Canonical representative of the Sigma-orbit of A.
inline IndecObject canonical_rep(const CategoryParams& P, const IndecObject& A) {
    return object_of(P, arc_of(P, A));
}

enum class Cmp { Less, Equal, Greater, Incomparable };

/// Partial order on mouth objects: comparable iff same family and component.
inline Cmp mouth_less(const MouthObject& a, const MouthObject& b) {
    if (a.family != b.family || a.c != b.c) return Cmp::Incomparable;
    if (a.v < b.v) return Cmp::Less;
    if (a.v > b.v) return Cmp::Greater;
    return Cmp::Equal;
}

} // namespace ddc
