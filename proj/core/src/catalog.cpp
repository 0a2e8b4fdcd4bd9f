#include "toric/catalog.hpp"

#include <map>
#include <stdexcept>

namespace toric {

namespace {

const std::map<std::string, std::vector<ExponentVector>>& polygon_vertices() {
    static const std::map<std::string, std::vector<ExponentVector>> table = {
        {"P2", {{0, 0}, {1, 0}}},
        {"P3_1", {{0, 0}, {2, 0}}},
        {"P3_2", {{0, 0}, {1, 0}, {0, 1}}},
        {"P4_1", {{0, 0}, {3, 0}}},
        {"P4_2", {{0, 0}, {2, 0}, {0, 1}}},
        {"P4_3", {{0, 0}, {1, 0}, {0, 1}, {1, 1}}},
        {"P4_4", {{-1, -1}, {1, 0}, {0, 1}}},
        {"P5_1", {{0, 0}, {4, 0}}},
        {"P5_2", {{0, 0}, {3, 0}, {0, 1}}},
        {"P5_3", {{0, 0}, {2, 0}, {1, 1}, {0, 1}}},
        {"P5_4", {{0, 0}, {1, 0}, {2, 2}, {0, 1}}},
        {"P5_5", {{0, -1}, {2, 0}, {0, 1}}},
        {"P5_6", {{-1, -1}, {1, 0}, {0, 2}}},
    };
    return table;
}

}  // namespace

LatticePolytope paper_polygon(const std::string& name) {
    auto it = polygon_vertices().find(name);
    if (it == polygon_vertices().end())
        throw std::invalid_argument("paper_polygon: unknown name '" + name + "'");
    return LatticePolytope::from_vertices(2, it->second);
}

const std::vector<std::string>& paper_polygon_names() {
    static const std::vector<std::string> names = {
        "P2",   "P3_1", "P3_2", "P4_1", "P4_2", "P4_3", "P4_4",
        "P5_1", "P5_2", "P5_3", "P5_4", "P5_5", "P5_6",
    };
    return names;
}

std::vector<std::string> paper_polygon_names_with_k(int k) {
    std::vector<std::string> r;
    for (const auto& name : paper_polygon_names())
        if (static_cast<int>(paper_polygon(name).count()) == k) r.push_back(name);
    return r;
}

}  // namespace toric
