// Small hand-written machines used by the test batteries and the CLI.
#pragma once

#include <string>
#include <vector>

#include "goi/ndpm.hpp"

namespace goi {

struct CatalogEntry {
  std::string name;
  std::string text;         // machine file contents
  bool every_pseudo = true;  // cross-check from every pseudo-configuration, not just the initial one
};

// One-move machines that halt from every configuration on every word.
const std::vector<CatalogEntry>& acyclic_catalog();

// Machines that loop on some (pseudo-configuration, word) pairs.
const std::vector<CatalogEntry>& looping_catalog();

Machine load(const CatalogEntry& e);

}  // namespace goi
