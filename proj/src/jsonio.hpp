#pragma once

#include "montecarlo.hpp"
#include "setpartition.hpp"
#include "strictpartition.hpp"

#include <string>

namespace reprlab {

std::string sample_json(const Partition& lambda, uint64_t seed);
std::string sample_json(const StrictPartition& lambda, uint64_t seed);
std::string sample_json(const SetPartition& pi, int q, uint64_t seed);

std::string report_json(const StatReport& rep);
std::string report_csv(const StatReport& rep);

// Extract a partition / strict partition / set partition from a sample JSON
// document (the round-trip format emitted by sample_json).
Partition partition_from_json(const std::string& text);
StrictPartition strict_from_json(const std::string& text);
SetPartition setpartition_from_json(const std::string& text);

} // namespace reprlab
