#pragma once

#include <string>

#include "mkp/enumerate.hpp"

namespace mkp {

/// Catalog file: {"manifest": {"n", "mode", "count", "keys": [hex...]},
/// "drawings": [Drawing JSON...]} with drawings in key order.
std::string catalog_to_json(const DrawingCatalog& cat);
DrawingCatalog catalog_from_json(const std::string& text);

std::string hex_key(const std::string& raw);

}  // namespace mkp
