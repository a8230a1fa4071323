#pragma once

#include <string>
#include <vector>

#include "semreg/lattice.hpp"

namespace semreg {

/// Raw instance data as read from disk, before validation.
struct InstanceFile {
  int d = 0;
  Int alpha = 0;
  std::vector<LatticePoint> generators;  // the extras; e_i are implicit
};

/// Line-oriented text: first line "d alpha", then one extra generator per
/// line as d integers. Blank lines and '#' comments are skipped.
InstanceFile parse_instance_text(const std::string& content);

/// JSON object {"d": ..., "alpha": ..., "generators": [[...], ...]}.
InstanceFile parse_instance_json(const std::string& content);

InstanceFile load_instance(const std::string& path, bool json);

std::string to_text(const InstanceFile& instance);

SemigroupPresentation to_presentation(const InstanceFile& instance);

}  // namespace semreg
