#include "toric/io.hpp"

#include <fstream>
#include <stdexcept>

namespace toric {

LatticePolytope polytope_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("vertices"))
        throw std::invalid_argument("polytope json: need {\"m\":..., \"vertices\":[...]}");
    int m = j.at("m").get<int>();
    std::vector<ExponentVector> verts;
    for (const auto& v : j.at("vertices")) {
        ExponentVector e;
        for (const auto& c : v) e.push_back(c.get<int>());
        verts.push_back(std::move(e));
    }
    return LatticePolytope::from_vertices(m, std::move(verts));
}

LatticePolytope load_polytope(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open polytope file: " + path);
    nlohmann::json j;
    in >> j;
    return polytope_from_json(j);
}

nlohmann::json polytope_to_json(const LatticePolytope& p, bool with_points) {
    nlohmann::json j;
    j["m"] = p.dim();
    j["vertices"] = p.vertices();
    if (with_points) j["lattice_points"] = p.lattice_points();
    return j;
}

void save_polytope(const LatticePolytope& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write polytope file: " + path);
    out << polytope_to_json(p).dump(2) << "\n";
}

}  // namespace toric
