#pragma once

#include <string>

#include "lct/delta_table.hpp"
#include "lct/facet_cone.hpp"

namespace lct::cli {

/// Transposed human-readable layout: degrees across the top in descending
/// order, one row per column of the table, tail columns marked with dots.
std::string render_plain(const RawWindow& w);

/// Same layout for a raw difference point over its support hull.
std::string render_plain(const MPoint& p);

}  // namespace lct::cli
