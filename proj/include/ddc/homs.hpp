#pragma once

#include <array>
#include <optional>
#include <vector>

#include "objects.hpp"

namespace ddc {

/// One of the ten hom statements, possibly shifted: the statement `id` holds
/// for (A, Sigma^{witness_shift} B); `strict` records whether every
/// inequality in it is strict.
struct HomStatement {
    int id = 0;
    bool strict = false;
    long long witness_shift = 0;

    auto operator<=>(const HomStatement&) const = default;
};

/// Serre pairing of statements: 0-1, 2-3, 4-5, 6-7, 8-9.
inline int serre_partner(int id) {
    if (id < 0 || id > 9) throw domain_error("serre_partner: id out of range");
    return id ^ 1;
}

namespace homdetail {

// The four boundary markers of each object that the statements compare.
struct Markers {
    MouthObject m;      // B^-(A)
    MouthObject mS;     // Sigma B^-(A)
    MouthObject mSinv;  // Sigma^{-1} B^-(A)
    MouthObject p;      // B^+(A)
    MouthObject pS;     // Sigma B^+(A)
};

inline Markers markers(const CategoryParams& P, const IndecObject& A) {
    BoundaryPair bp = boundary_pair(P, A);
    Markers M;
    M.m = bp.minus;
    M.mS = as_mouth(shift(P, bp.minus.object(), 1));
    M.mSinv = as_mouth(shift(P, bp.minus.object(), -1));
    M.p = as_mouth(bp.plus(P));
    M.pS = as_mouth(bp.sigma_plus(P));
    return M;
}

enum class ARef { m, mS, p, pS };
enum class BRef { m, mSinv, p, pS };

inline const MouthObject& get(const Markers& M, ARef r) {
    switch (r) {
        case ARef::m: return M.m;
        case ARef::mS: return M.mS;
        case ARef::p: return M.p;
        default: return M.pS;
    }
}
inline const MouthObject& get(const Markers& M, BRef r) {
    switch (r) {
        case BRef::m: return M.m;
        case BRef::mSinv: return M.mSinv;
        case BRef::p: return M.p;
        default: return M.pS;
    }
}

// An inequality between an A-marker and a B-marker inside one family's mouth
// order; b_lhs puts the B-marker on the left.
struct Atom {
    ARef a;
    BRef b;
    Family fam;
    bool strict;
    bool b_lhs;
};

struct StatementDef {
    std::vector<Atom> atoms;
    // side constraints that do not involve the shift
    std::optional<Family> a_minus_family;  // family of B^-(A)
    std::optional<Family> a_plus_family;   // family of B^+(A)
    std::optional<Family> b_minus_family;  // family of B^-(B)
    std::optional<Family> b_plus_family;   // family of B^+(B)
};

inline const std::array<StatementDef, 10>& statement_table() {
    using F = Family;
    static const std::array<StatementDef, 10> T = {{
        // 0: B-(A) <= B-(B) < S B+(A) <= S B+(B) in X
        {{{ARef::m, BRef::m, F::X, false, false},
          {ARef::pS, BRef::m, F::X, true, true},
          {ARef::pS, BRef::pS, F::X, false, false}},
         {}, {}, {}, {}},
        // 1: S^-1 B-(B) < B-(A) <= B+(B) < S B+(A) in X
        {{{ARef::m, BRef::mSinv, F::X, true, true},
          {ARef::m, BRef::p, F::X, false, false},
          {ARef::pS, BRef::p, F::X, true, true}},
         {}, {}, {}, {}},
        // 2: B-(A) <= B-(B) < S B+(A) in X and B+(B) in Y
        {{{ARef::m, BRef::m, F::X, false, false},
          {ARef::pS, BRef::m, F::X, true, true}},
         {}, {}, {}, F::Y},
        // 3: S^-1 B-(B) < B-(A) <= B+(B) in X and B+(A) in Y
        {{{ARef::m, BRef::mSinv, F::X, true, true},
          {ARef::m, BRef::p, F::X, false, false}},
         {}, F::Y, {}, {}},
        // 4: B-(A) <= B-(B) in X and B+(A) <= B+(B) in Y
        {{{ARef::m, BRef::m, F::X, false, false},
          {ARef::p, BRef::p, F::Y, false, false}},
         {}, {}, {}, {}},
        // 5: B-(B) < S B-(A) in X and B+(B) < S B+(A) in Y
        {{{ARef::mS, BRef::m, F::X, true, true},
          {ARef::pS, BRef::p, F::Y, true, true}},
         {}, {}, {}, {}},
        // 6: B-(A) in X and S^-1 B-(B) < B+(A) <= B+(B) in Y
        {{{ARef::p, BRef::mSinv, F::Y, true, true},
          {ARef::p, BRef::p, F::Y, false, false}},
         F::X, {}, {}, {}},
        // 7: B-(B) in X and B-(A) <= B+(B) < S B+(A) in Y
        {{{ARef::m, BRef::p, F::Y, false, false},
          {ARef::pS, BRef::p, F::Y, true, true}},
         {}, {}, F::X, {}},
        // 8: as 0 in Y
        {{{ARef::m, BRef::m, F::Y, false, false},
          {ARef::pS, BRef::m, F::Y, true, true},
          {ARef::pS, BRef::pS, F::Y, false, false}},
         {}, {}, {}, {}},
        // 9: as 1 in Y
        {{{ARef::m, BRef::mSinv, F::Y, true, true},
          {ARef::m, BRef::p, F::Y, false, false},
          {ARef::pS, BRef::p, F::Y, true, true}},
         {}, {}, {}, {}},
    }};
    return T;
}

inline bool side_constraints_ok(const StatementDef& st, const Markers& MA, const Markers& MB) {
    if (st.a_minus_family && MA.m.family != *st.a_minus_family) return false;
    if (st.a_plus_family && MA.p.family != *st.a_plus_family) return false;
    if (st.b_minus_family && MB.m.family != *st.b_minus_family) return false;
    if (st.b_plus_family && MB.p.family != *st.b_plus_family) return false;
    return true;
}

// Inclusive t-interval with sentinels.
struct TRange {
    static constexpr long long NEG = -(1LL << 62);
    static constexpr long long POS = (1LL << 62);
    long long lo = NEG, hi = POS;

    bool empty() const { return lo > hi; }
    void meet(const TRange& o) {
        lo = std::max(lo, o.lo);
        hi = std::min(hi, o.hi);
    }
    long long count() const { return empty() ? 0 : hi - lo + 1; }
};

// Solutions t of  a REL Sigma^{d + r t} b  within one family's mouth order,
// where a is fixed. The component match pins nothing further once d is
// chosen; the coordinate of the shifted marker is affine in t.
inline std::optional<TRange> atom_range(const CategoryParams& P, const Atom& atom,
                                        const MouthObject& a, const MouthObject& b, int d) {
    if (a.family != atom.fam || b.family != atom.fam) return std::nullopt;
    if (floor_mod(b.c + d, P.r) != a.c) return std::nullopt;
    long long t0 = floor_div(b.c + d, P.r);
    long long step = (atom.fam == Family::X) ? P.p() : -P.q();
    // coordinate of Sigma^{d + r t} b = b.v + (t0 + t) * step =: base + t*step
    long long base = b.v + t0 * step;
    long long diff = a.v - base;
    TRange r;
    long long s = step > 0 ? step : -step;
    if (step > 0) {
        if (!atom.b_lhs) {
            // a < base + t*step:  t > diff/s;   a <=:  t >= ceil(diff/s)
            r.lo = atom.strict ? floor_div(diff, s) + 1 : -floor_div(-diff, s);
        } else {
            // base + t*step < a:  t < diff/s;   <=:  t <= floor(diff/s)
            r.hi = atom.strict ? -floor_div(-diff, s) - 1 : floor_div(diff, s);
        }
    } else {
        if (!atom.b_lhs) {
            // a < base - t*s:  t < -diff/s;   a <=:  t <= floor(-diff/s)
            r.hi = atom.strict ? -floor_div(diff, s) - 1 : floor_div(-diff, s);
        } else {
            // base - t*s < a:  t > -diff/s;   <=:  t >= ceil(-diff/s)
            r.lo = atom.strict ? floor_div(-diff, s) + 1 : -floor_div(diff, s);
        }
    }
    return r;
}

} // namespace homdetail

/// The statements satisfied by the pair (A, B) as given (no shift applied),
/// each tagged with whether all of its inequalities hold strictly.
inline std::vector<HomStatement> satisfied_statements(const CategoryParams& P, const IndecObject& A,
                                                      const IndecObject& B) {
    using namespace homdetail;
    Markers MA = markers(P, A), MB = markers(P, B);
    std::vector<HomStatement> out;
    for (int id = 0; id < 10; ++id) {
        const StatementDef& st = statement_table()[id];
        if (!side_constraints_ok(st, MA, MB)) continue;
        bool holds = true, all_strict = true;
        for (const Atom& atom : st.atoms) {
            const MouthObject& a = get(MA, atom.a);
            const MouthObject& b = get(MB, atom.b);
            Cmp c = mouth_less(atom.b_lhs ? b : a, atom.b_lhs ? a : b);
            bool ok = (c == Cmp::Less) || (!atom.strict && c == Cmp::Equal);
            if (!ok) { holds = false; break; }
            if (c == Cmp::Equal) all_strict = false;
        }
        if (holds) out.push_back({id, all_strict, 0});
    }
    return out;
}

/// dim Hom(A,B): the number of satisfied statements.
inline long long hom_dim(const CategoryParams& P, const IndecObject& A, const IndecObject& B) {
    return static_cast<long long>(satisfied_statements(P, A, B).size());
}

namespace homdetail {

// Count of k with statement `id` satisfied for (A, Sigma^k B); with
// `all_strict` every inequality is forced strict.
inline long long statement_orbit_count(const CategoryParams& P, const Markers& MA, const Markers& MB,
                                       int id, bool all_strict) {
    const StatementDef& st = statement_table()[id];
    if (!side_constraints_ok(st, MA, MB)) return 0;
    long long total = 0;
    for (int d = 0; d < P.r; ++d) {
        TRange range;
        bool feasible = true;
        for (const Atom& atom0 : st.atoms) {
            Atom atom = atom0;
            if (all_strict) atom.strict = true;
            auto r = atom_range(P, atom, get(MA, atom.a), get(MB, atom.b), d);
            if (!r) { feasible = false; break; }
            range.meet(*r);
            if (range.empty()) { feasible = false; break; }
        }
        if (feasible) total += range.count();
    }
    return total;
}

} // namespace homdetail

/// hom_{D/Sigma}(A, B) = sum over k of hom_D(A, Sigma^k B).
inline long long hom_dim_orbit(const CategoryParams& P, const IndecObject& A, const IndecObject& B) {
    using namespace homdetail;
    Markers MA = markers(P, A), MB = markers(P, B);
    long long total = 0;
    for (int id = 0; id < 10; ++id) total += statement_orbit_count(P, MA, MB, id, false);
    return total;
}

/// dim of the image of Hom(tau^{-1}A, B) -> Hom(A, B): the number of
/// statements satisfied with every inequality strict.
inline long long factoring_dim(const CategoryParams& P, const IndecObject& A, const IndecObject& B) {
    long long n = 0;
    for (const HomStatement& s : satisfied_statements(P, A, B))
        if (s.strict) ++n;
    return n;
}

/// Sum of factoring_dim(A, Sigma^k B) over all k.
inline long long factoring_dim_orbit(const CategoryParams& P, const IndecObject& A,
                                     const IndecObject& B) {
    using namespace homdetail;
    Markers MA = markers(P, A), MB = markers(P, B);
    long long total = 0;
    for (int id = 0; id < 10; ++id) total += statement_orbit_count(P, MA, MB, id, true);
    return total;
}

enum class ObjectClass { Exceptional, Spherelike, Neither };

inline ObjectClass classify(const CategoryParams& P, const IndecObject& A) {
    long long d = hom_dim_orbit(P, A, A);
    if (d == 1) return ObjectClass::Exceptional;
    if (d == 2) return ObjectClass::Spherelike;
    return ObjectClass::Neither;
}

} // namespace ddc
