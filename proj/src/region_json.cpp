#include "tilewave/region_json.hpp"

namespace tilewave::geometry {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json rational_to_json(const Rational& q) {
    return ordered_json::array({rat_num(q).str(), rat_den(q).str()});
}

Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("rational: expected [num, den] pair");
    Integer n(j[0].get<std::string>());
    Integer d(j[1].get<std::string>());
    if (d <= 0) throw std::invalid_argument("rational: denominator must be positive");
    return Rational(n, d);
}

ordered_json region_to_json(const Region& r) {
    ordered_json parts = ordered_json::array();
    for (const auto& p : r.parts) {
        ordered_json verts = ordered_json::array();
        for (const auto& v : p.v)
            verts.push_back(ordered_json::array({rational_to_json(v.x), rational_to_json(v.y)}));
        parts.push_back(std::move(verts));
    }
    ordered_json out;
    out["schema"] = kRegionSchema;
    out["parts"] = std::move(parts);
    return out;
}

Region region_from_json(const json& j) {
    if (j.value("schema", "") != kRegionSchema)
        throw std::invalid_argument("region: unknown schema");
    Region r;
    for (const auto& part : j.at("parts")) {
        std::vector<Point2> v;
        for (const auto& vert : part)
            v.push_back({rational_from_json(vert.at(0)), rational_from_json(vert.at(1))});
        r.parts.push_back(normalized(Polygon(std::move(v))));
    }
    return r;
}

ordered_json lattice_to_json(const Lattice2& g) {
    ordered_json out;
    out["basis"] = ordered_json::array({rational_to_json(g.basis.a11), rational_to_json(g.basis.a12),
                                        rational_to_json(g.basis.a21), rational_to_json(g.basis.a22)});
    out["covolume"] = format_rational(g.covolume);
    return out;
}

Lattice2 lattice_from_json(const json& j) {
    const auto& b = j.at("basis");
    return Lattice2::from_basis(Mat2::from_rational(
        rational_from_json(b.at(0)), rational_from_json(b.at(1)), rational_from_json(b.at(2)),
        rational_from_json(b.at(3))));
}

}  // namespace tilewave::geometry
