#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "collections.hpp"
#include "groupoid.hpp"
#include "lattice.hpp"
#include "mutation.hpp"
#include "objects.hpp"

namespace ddc {

using json = nlohmann::json;

// --- token forms used on the command line ---------------------------------

/// Parses `X,0,1,4`.
inline IndecObject parse_object_token(const CategoryParams& P, const std::string& tok) {
    std::istringstream is(tok);
    std::string fam;
    std::getline(is, fam, ',');
    Family f;
    if (fam == "X" || fam == "x") f = Family::X;
    else if (fam == "Y" || fam == "y") f = Family::Y;
    else if (fam == "Z" || fam == "z") f = Family::Z;
    else throw domain_error("object token: bad family in '" + tok + "'");
    std::string part;
    long long v[3];
    for (int k = 0; k < 3; ++k) {
        if (!std::getline(is, part, ',')) throw domain_error("object token: expected family,c,i,j");
        v[k] = std::stoll(part);
    }
    return make_object(P, f, static_cast<int>(v[0]), v[1], v[2]);
}

inline std::string object_token(const IndecObject& o) {
    std::ostringstream os;
    os << family_char(o.family) << "," << o.c << "," << o.i << "," << o.j;
    return os.str();
}

/// Parses `x1`, `y3`.
inline MarkedPoint parse_point_token(const CategoryParams& P, const std::string& tok) {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y'))
        throw domain_error("marked point token: expected x<i> or y<i>, got '" + tok + "'");
    Side side = tok[0] == 'x' ? Side::X : Side::Y;
    int idx = std::stoi(tok.substr(1));
    int bound = side == Side::X ? P.p() : P.q();
    if (idx < 1 || idx > bound)
        throw domain_error("marked point token: index out of range in '" + tok + "'");
    return {side, idx};
}

/// Parses `x1:y1:-1`.
inline Arc parse_arc_token(const CategoryParams& P, const std::string& tok) {
    std::istringstream is(tok);
    std::string a, b, w;
    if (!std::getline(is, a, ':') || !std::getline(is, b, ':') || !std::getline(is, w, ':'))
        throw domain_error("arc token: expected from:to:w, got '" + tok + "'");
    Arc arc{parse_point_token(P, a), parse_point_token(P, b), std::stoll(w)};
    // accept only canonical triples; object_of validates
    object_of(P, arc);
    return arc;
}

// --- JSON encodings --------------------------------------------------------

inline json to_json(const IndecObject& o) {
    return {{"family", std::string(1, family_char(o.family))}, {"c", o.c}, {"i", o.i}, {"j", o.j}};
}

inline IndecObject object_from_json(const CategoryParams& P, const json& j) {
    std::string fam = j.at("family").get<std::string>();
    Family f = fam == "X" ? Family::X : fam == "Y" ? Family::Y : Family::Z;
    if (fam != "X" && fam != "Y" && fam != "Z") throw domain_error("object json: bad family");
    return make_object(P, f, j.at("c").get<int>(), j.at("i").get<long long>(),
                       j.at("j").get<long long>());
}

inline json to_json(const MarkedPoint& pt) {
    return {{"side", std::string(1, pt.side == Side::X ? 'X' : 'Y')}, {"idx", pt.idx}};
}

inline MarkedPoint point_from_json(const CategoryParams& P, const json& j) {
    std::string side = j.at("side").get<std::string>();
    if (side != "X" && side != "Y") throw domain_error("point json: bad side");
    MarkedPoint pt{side == "X" ? Side::X : Side::Y, j.at("idx").get<int>()};
    int bound = pt.side == Side::X ? P.p() : P.q();
    if (pt.idx < 1 || pt.idx > bound) throw domain_error("point json: index out of range");
    return pt;
}

inline json to_json(const Arc& a) {
    return {{"from", to_json(a.from)}, {"to", to_json(a.to)}, {"w", a.w}};
}

inline Arc arc_from_json(const CategoryParams& P, const json& j) {
    Arc a{point_from_json(P, j.at("from")), point_from_json(P, j.at("to")),
          j.at("w").get<long long>()};
    object_of(P, a);
    return a;
}

inline json to_json(const HomStatement& s) {
    return {{"id", s.id}, {"strict", s.strict}, {"witness_shift", s.witness_shift}};
}

inline json to_json(const SubgroupoidDescriptor& D) {
    json blocks = json::array();
    for (size_t bid = 0; bid < D.period.size(); ++bid) {
        json blk = json::array();
        for (size_t k = 0; k < D.points.size(); ++k)
            if (static_cast<size_t>(D.block[k]) == bid) blk.push_back(D.points[k].str());
        blocks.push_back(blk);
    }
    json base = json::object();
    for (size_t k = 0; k < D.points.size(); ++k) base[D.points[k].str()] = D.base[k];
    return {{"blocks", blocks}, {"periods", D.period}, {"base", base}};
}

/// Collection files: {"objects":[...]} or {"arcs":[...]}.
inline Collection collection_from_json(const CategoryParams& P, const json& j) {
    if (j.contains("objects")) {
        std::vector<IndecObject> objs;
        for (const json& o : j.at("objects")) objs.push_back(object_from_json(P, o));
        return Collection(P, objs);
    }
    if (j.contains("arcs")) {
        std::vector<Arc> arcs;
        for (const json& a : j.at("arcs")) {
            if (a.is_string()) arcs.push_back(parse_arc_token(P, a.get<std::string>()));
            else arcs.push_back(arc_from_json(P, a));
        }
        return Collection::from_arcs(P, arcs);
    }
    throw domain_error("collection json: expected an 'objects' or 'arcs' array");
}

inline Collection load_collection(const CategoryParams& P, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open collection file: " + path);
    json j;
    in >> j;
    return collection_from_json(P, j);
}

inline json to_json(const Collection& c) {
    json objs = json::array(), arcs = json::array();
    for (const IndecObject& m : c.members()) objs.push_back(to_json(m));
    for (const Arc& a : c.arcs()) arcs.push_back(a.str());
    return {{"objects", objs}, {"arcs", arcs}};
}

inline json lattice_to_json(const std::vector<ThickClass>& classes,
                            const std::vector<std::pair<size_t, size_t>>& covers) {
    json cls = json::array();
    for (const ThickClass& c : classes) {
        json reps = json::array();
        for (const Collection& r : c.representatives) {
            json arcs = json::array();
            for (const Arc& a : r.arcs()) arcs.push_back(a.str());
            reps.push_back(arcs);
        }
        cls.push_back({{"descriptor", to_json(c.descriptor)},
                       {"size", c.representatives.size()},
                       {"exceptional", c.exceptional},
                       {"z_family", c.z_family},
                       {"representatives", reps}});
    }
    json cov = json::array();
    for (auto [a, b] : covers) cov.push_back({a, b});
    return {{"classes", cls}, {"covers", cov}};
}

} // namespace ddc
