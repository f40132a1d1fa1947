#pragma once

#include <string>

#include "coxkit/structure.hpp"
#include "coxkit/sweep.hpp"
#include "coxkit/tables.hpp"

namespace coxkit {

// JSON is the machine contract: stable key order, no timings, no witnesses.
std::string to_json(const TableReport& report);
std::string to_json(const SweepReport& report);
std::string to_json(const StructureReport& report);

std::string to_markdown(const TableReport& report);
std::string to_markdown(const SweepReport& report);
std::string to_markdown(const StructureReport& report);

}  // namespace coxkit
