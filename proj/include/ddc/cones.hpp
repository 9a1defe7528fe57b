#pragma once

#include <optional>
#include <vector>

#include "geometry.hpp"
#include "homs.hpp"
#include "objects.hpp"

namespace ddc {

/// Inverts Lemma-endpoints: the unique indecomposable with B^-(C) = minus and
/// B^+(C) = plus (both given as actual objects). Returns nullopt when the
/// pair degenerates to the zero object (Sigma(plus) == minus), which happens
/// exactly for the vanishing summand of a non-strict cone.
inline std::optional<IndecObject> object_from_boundary_pair(const CategoryParams& P,
                                                            const IndecObject& minus,
                                                            const IndecObject& plus) {
    if (!is_mouth(minus) || !is_mouth(plus))
        throw internal_error("object_from_boundary_pair: inputs must be mouth objects");
    IndecObject sp = shift(P, plus, 1);
    if (minus.family == Family::X && plus.family == Family::Y) {
        if (minus.c != plus.c)
            throw internal_error("object_from_boundary_pair: mixed pair in different components");
        return IndecObject{Family::Z, minus.c, minus.i, plus.i};
    }
    if (minus.family != sp.family || minus.c != sp.c)
        throw internal_error("object_from_boundary_pair: incompatible pair " + minus.str() + ", " +
                             plus.str());
    if (minus.family == Family::X) {
        if (sp.i == minus.i) return std::nullopt; // height -1: zero object
        if (sp.i < minus.i) throw internal_error("object_from_boundary_pair: negative X height");
        return IndecObject{Family::X, minus.c, minus.i, sp.i - 1};
    }
    if (sp.i == minus.i) return std::nullopt;
    if (sp.i < minus.i) throw internal_error("object_from_boundary_pair: negative Y height");
    return IndecObject{Family::Y, minus.c, sp.i - 1, minus.i};
}

/// The cone of the basis morphism attached to statement s for (A, B), as the
/// triangle A -> B -> summands. Strict statements yield two summands; a
/// statement holding with an equality yields one.
struct ConeResult {
    IndecObject a;
    IndecObject b;
    HomStatement statement;
    std::vector<IndecObject> summands; // exact coordinates, in table order
};

inline ConeResult cone_of(const CategoryParams& P, const IndecObject& A, const IndecObject& B,
                          int statement_id) {
    std::optional<HomStatement> found;
    for (const HomStatement& s : satisfied_statements(P, A, B))
        if (s.id == statement_id) found = s;
    if (!found)
        throw domain_error("cone_of: statement " + std::to_string(statement_id) +
                           " is not satisfied for (" + A.str() + ", " + B.str() + ")");
    BoundaryPair ba = boundary_pair(P, A), bb = boundary_pair(P, B);
    IndecObject AmS = shift(P, ba.minus.object(), 1);
    IndecObject ApS = ba.sigma_plus(P);
    IndecObject Bm = bb.minus.object();
    IndecObject Bp = bb.plus(P);
    bool even = statement_id % 2 == 0;
    std::vector<std::pair<IndecObject, IndecObject>> pairs;
    if (even) {
        pairs.push_back({ApS, Bp}); // C1
        pairs.push_back({AmS, Bm}); // C2
    } else {
        pairs.push_back({AmS, Bp});                        // C1
        pairs.push_back({Bm, shift(P, ba.plus(P), 1)});    // C2: (B^-(B), Sigma B^+(A))
    }
    ConeResult res{A, B, *found, {}};
    for (auto& [mn, pl] : pairs) {
        auto C = object_from_boundary_pair(P, mn, pl);
        if (C) res.summands.push_back(*C);
    }
    if (res.summands.empty())
        throw domain_error("cone_of: the morphism is an isomorphism; its cone is zero");
    if (found->strict ? res.summands.size() != 2 : res.summands.size() != 1)
        throw internal_error("cone_of: summand count disagrees with strictness");
    return res;
}

// ---------------------------------------------------------------------------
// Appendix A triangles, one entry point per lemma (ray and coray triangles of
// the X/Y lemmas dispatched as separate kinds).
// ---------------------------------------------------------------------------

enum class TriangleKind {
    XconesRay,    // X^c(i,j) -> X^c(i,j+b) -> X^c(j+1,j+b)
    XconesCoray,  // X^c(i,i+a-1) -> X^c(i,j) -> X^c(i+a,j)
    Xconesgen,    // X -> X^c(i+a,j+b) -> X^c(j+1,j+b) + S X^c(i,i+a-1)
    Xconesint,    // X -> X^c(i+a,j) + X^c(i,j+b) -> X^c(i+a,j+b)
    XZcones,      // X -> Z^c(i+a,k) -> Z^c(j+1,k) + S X^c(i,i+a-1)
    ZXcones,      // X^c(i-a,i+b) -> X^c(i,i+b) + Z^c(i-a,j) -> Z
    ZZcones,      // X^c(i,i+a-1) + Y^c(j+b-1,j) -> Z -> Z^c(i+a,j+b)
    ZZconesinf,   // Z -> Z^c(i+a,j) + Z^c(i,j+b) -> Z^c(i+a,j+b)
    YZcones,      // Y -> Z^c(k,j+b) -> Z^c(k,i+1) + S Y^c(j+b-1,j)
    YconesRay,    // Y^c(j+b-1,j) -> Y^c(i,j) -> Y^c(i,j+b)
    YconesCoray,  // Y^c(i,j) -> Y^c(i+a,j) -> Y^c(i+a,i+1)
    ZYcones,      // Y^c(j+a,j-b) -> Y^c(j+a,j) + Z^c(i,j-b) -> Z
    Yconesgen,    // Y -> Y^c(i+a,j+b) -> Y^c(i+a,i+1) + S Y^c(j+b-1,j)
    Yconesint,    // Y -> Y^c(i+a,j) + Y^c(i,j+b) -> Y^c(i+a,j+b)
};

/// A triangle V1 -> V2 -> V3 with possibly decomposable middle or end terms.
struct Triangle {
    std::vector<IndecObject> v1, v2, v3;
};

inline Triangle appendix_triangle(const CategoryParams& P, TriangleKind kind, const IndecObject& base,
                                  long long a, long long b, long long k = 0) {
    auto X = [&](long long i, long long j) { return make_object(P, Family::X, base.c, i, j); };
    auto Y = [&](long long i, long long j) { return make_object(P, Family::Y, base.c, i, j); };
    auto Z = [&](long long i, long long j) { return make_object(P, Family::Z, base.c, i, j); };
    auto S = [&](const IndecObject& o) { return shift(P, o, 1); };
    const long long i = base.i, j = base.j;
    switch (kind) {
        case TriangleKind::XconesRay:
            if (base.family != Family::X || b <= 0) throw domain_error("XconesRay: need X object, b > 0");
            return {{base}, {X(i, j + b)}, {X(j + 1, j + b)}};
        case TriangleKind::XconesCoray:
            if (base.family != Family::X || a <= 0 || a > j - i)
                throw domain_error("XconesCoray: need X object, 0 < a <= height");
            return {{X(i, i + a - 1)}, {base}, {X(i + a, j)}};
        case TriangleKind::Xconesgen:
            if (base.family != Family::X || a <= 0 || b <= 0 || a > j - i)
                throw domain_error("Xconesgen: need X object, a,b > 0, a <= height");
            return {{base}, {X(i + a, j + b)}, {X(j + 1, j + b), S(X(i, i + a - 1))}};
        case TriangleKind::Xconesint:
            if (base.family != Family::X || a <= 0 || b <= 0 || a > j - i)
                throw domain_error("Xconesint: need X object, a,b > 0, a <= height");
            return {{base}, {X(i + a, j), X(i, j + b)}, {X(i + a, j + b)}};
        case TriangleKind::XZcones:
            if (base.family != Family::X || a <= 0 || a > j - i)
                throw domain_error("XZcones: need X object, 0 < a <= height");
            return {{base}, {Z(i + a, k)}, {Z(j + 1, k), S(X(i, i + a - 1))}};
        case TriangleKind::ZXcones:
            if (base.family != Family::Z || a <= 0 || b < 0)
                throw domain_error("ZXcones: need Z object, a > 0, b >= 0");
            return {{X(i - a, i + b)}, {X(i, i + b), Z(i - a, j)}, {base}};
        case TriangleKind::ZZcones:
            if (base.family != Family::Z || a <= 0 || b <= 0)
                throw domain_error("ZZcones: need Z object, a,b > 0");
            return {{X(i, i + a - 1), Y(j + b - 1, j)}, {base}, {Z(i + a, j + b)}};
        case TriangleKind::ZZconesinf:
            if (base.family != Family::Z || a <= 0 || b <= 0)
                throw domain_error("ZZconesinf: need Z object, a,b > 0");
            return {{base}, {Z(i + a, j), Z(i, j + b)}, {Z(i + a, j + b)}};
        case TriangleKind::YZcones:
            if (base.family != Family::Y || b <= 0 || b > i - j)
                throw domain_error("YZcones: need Y object, 0 < b <= height");
            return {{base}, {Z(k, j + b)}, {Z(k, i + 1), S(Y(j + b - 1, j))}};
        case TriangleKind::YconesRay:
            if (base.family != Family::Y || b <= 0 || b > i - j)
                throw domain_error("YconesRay: need Y object, 0 < b <= height");
            return {{Y(j + b - 1, j)}, {base}, {Y(i, j + b)}};
        case TriangleKind::YconesCoray:
            if (base.family != Family::Y || a <= 0) throw domain_error("YconesCoray: need Y object, a > 0");
            return {{base}, {Y(i + a, j)}, {Y(i + a, i + 1)}};
        case TriangleKind::ZYcones:
            if (base.family != Family::Z || a < 0 || b <= 0)
                throw domain_error("ZYcones: need Z object, a >= 0, b > 0");
            return {{Y(j + a, j - b)}, {Y(j + a, j), Z(i, j - b)}, {base}};
        case TriangleKind::Yconesgen:
            if (base.family != Family::Y || a <= 0 || b <= 0 || b > i - j)
                throw domain_error("Yconesgen: need Y object, a,b > 0, b <= height");
            return {{base}, {Y(i + a, j + b)}, {Y(i + a, i + 1), S(Y(j + b - 1, j))}};
        case TriangleKind::Yconesint:
            if (base.family != Family::Y || a <= 0 || b <= 0 || b > i - j)
                throw domain_error("Yconesint: need Y object, a,b > 0, b <= height");
            return {{base}, {Y(i + a, j), Y(i, j + b)}, {Y(i + a, j + b)}};
    }
    throw domain_error("appendix_triangle: unknown kind");
}

/// Verifies the arc path relation induced by a strict cone:
///   even statements:  alpha_A . alpha_C1  ~  alpha_C2 . alpha_B
///   odd statements:   alpha_A . rev(alpha_C2)  ~  alpha_C1 . rev(alpha_B)
/// by composing canonical lifts from the common start and comparing the end
/// lift points. Throws on a non-strict statement; returns false only if the
/// relation fails (which would indicate a convention bug).
inline bool path_relation(const CategoryParams& P, const IndecObject& A, const IndecObject& B,
                          int statement_id) {
    ConeResult cr = cone_of(P, A, B, statement_id);
    if (!cr.statement.strict)
        throw domain_error("path_relation: statement must be satisfied with strict inequalities");
    Arc aA = arc_of(P, A), aB = arc_of(P, B);
    Arc aC1 = arc_of(P, cr.summands[0]), aC2 = arc_of(P, cr.summands[1]);
    LiftedArc lA = lift(aA), lB = lift(aB), lC1 = lift(aC1), lC2 = lift(aC2);
    auto compose_end = [](const LiftedArc& first, const LiftedArc& second_raw, bool rev_second) {
        LiftedArc second = rev_second ? reverse(second_raw) : second_raw;
        if (second.a.pt != first.b.pt)
            throw internal_error("path_relation: paths are not composable");
        return deck(second.b, first.b.level - second.a.level);
    };
    if (statement_id % 2 == 0) {
        LiftedPoint lhs = compose_end(lA, lC1, lA.b.pt != lC1.a.pt);
        LiftedPoint rhs = compose_end(lC2, lB, lC2.b.pt != lB.a.pt);
        return lhs == rhs;
    }
    LiftedPoint lhs = compose_end(lA, lC2, true);
    LiftedPoint rhs = compose_end(lC1, lB, true);
    return lhs == rhs;
}

} // namespace ddc
