#include "knot/catalog.hpp"

#include <algorithm>
#include <fstream>

#include "knot/flype.hpp"

namespace knot {

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::SyntaxError, "cannot open catalog file " + path);
    std::vector<CatalogEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw Error(ErrorKind::SyntaxError, "catalog line without tab: " + line);
        out.push_back({line.substr(0, tab), GaussCode::parse(line.substr(tab + 1))});
    }
    return out;
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& cat, const std::string& name) {
    for (const auto& e : cat)
        if (e.name == name) return &e;
    return nullptr;
}

std::string identify(const std::vector<CatalogEntry>& cat, const SignedDiagram& sd) {
    std::string key = diagram_key(sd);
    for (const auto& e : cat) {
        SignedDiagram ref = make_signed(e.code);
        FlypeOrbit orbit = enumerate_orbit(ref);
        if (std::find(orbit.keys.begin(), orbit.keys.end(), key) != orbit.keys.end())
            return e.name;
        FlypeOrbit mirror_orbit = enumerate_orbit(mirror_diagram(ref));
        if (std::find(mirror_orbit.keys.begin(), mirror_orbit.keys.end(), key) != mirror_orbit.keys.end())
            return e.name + "*";
    }
    return "";
}

} // namespace knot
