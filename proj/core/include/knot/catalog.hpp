#pragma once

#include <string>
#include <vector>

#include "knot/embedding.hpp"
#include "knot/gauss_code.hpp"

namespace knot {

/// Named reference diagram from a catalog file. Lines look like
///   3_1<TAB>O1+ U2+ O3+ U1+ O2+ U3+
/// with '#' comment lines and blank lines skipped.
struct CatalogEntry {
    std::string name;
    GaussCode code;
};

std::vector<CatalogEntry> load_catalog(const std::string& path);

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& cat, const std::string& name);

/// Name of the catalog knot presenting the same diagram up to flypes, with a
/// '*' suffix when only the mirror matches; empty when nothing matches.
std::string identify(const std::vector<CatalogEntry>& cat, const SignedDiagram& sd);

} // namespace knot
