#pragma once

#include "partition.hpp"
#include "setpartition.hpp"
#include "strictpartition.hpp"

#include <string>

namespace reprlab {

// Deterministic SVG 1.1 documents (no timestamps), suitable for byte-exact
// golden tests.

// Rescaled profile with the limit shape overlay.
std::string svg_profile(const Partition& lambda);
std::string svg_profile(const StrictPartition& lambda);

// Standard representation arc diagram.
std::string svg_arcs(const SetPartition& pi);

// Heatmap of mu_pi on the triangle Delta.
std::string svg_heatmap(const SetPartition& pi, int grid);

} // namespace reprlab
