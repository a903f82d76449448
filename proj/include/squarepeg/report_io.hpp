#pragma once

// JSON form of SquareReport, used by `solve --json` and re-read by
// `plot --from-report`. Doubles round-trip exactly, so a plot rendered from a
// saved report is byte-identical to one rendered from the in-process report.

#include "squarepeg/solver.hpp"

#include <string>

namespace squarepeg {

std::string report_to_json(const SquareReport& report);
SquareReport report_from_json(const std::string& text);

} // namespace squarepeg
