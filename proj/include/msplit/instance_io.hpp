#pragma once

// Instance files: a single JSON object with keys "p" (integer), "ground"
// (array of labels), "columns" (array of integer arrays, column-major, one
// per ground element), and optional "T" (array of labels).

#include <optional>
#include <string>

#include "msplit/matroid.hpp"

namespace msplit {

struct LoadedInstance {
  Matroid matroid;
  std::optional<GroundSubset> split_set;
};

LoadedInstance parse_instance_text(const std::string& text);
LoadedInstance load_instance(const std::string& path);

std::string instance_to_text(const Matroid& m, const std::optional<GroundSubset>& t);
void write_instance(const std::string& path, const Matroid& m,
                    const std::optional<GroundSubset>& t);

}  // namespace msplit
