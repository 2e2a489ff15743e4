#ifndef GF4SSS_CATALOG_HPP
#define GF4SSS_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "gf4sss/code.hpp"

namespace gf4sss {

// Built-in named codes and published weight enumerators. Entries carrying
// both a generator and an enumerator are checked against each other before
// first use.
struct CatalogEntry {
    std::string name;
    std::optional<Code> code;
    std::optional<WeightDistribution> enumerator;
    std::string provenance;
};

const CatalogEntry& catalog_get(const std::string& name);  // UnknownName
std::vector<std::string> catalog_names();
bool catalog_has(const std::string& name);

}  // namespace gf4sss

#endif
