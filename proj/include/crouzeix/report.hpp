#pragma once

// JSON, CSV and SVG output. JSON numbers carry 15 significant digits so that
// reruns are byte-identical across platforms with the same libm.

#include <string>

#include <json.hpp>

#include "crouzeix/bounds.hpp"
#include "crouzeix/conformal.hpp"
#include "crouzeix/kms.hpp"
#include "crouzeix/omega.hpp"

namespace crouzeix::report {

using Json = nlohmann::ordered_json;

// x rounded to 15 significant digits; non-finite values become null.
Json number(double x);

Json to_json(const conformal::ConformalData& data);
Json to_json(const bounds::BoundReport& report);
Json to_json(const conformal::ConvergenceTable& table);
Json to_json(const omega::InclusionReport& report);
Json to_json(const omega::H1Result& h1);

// Two-space indent, trailing newline.
std::string dump(const Json& j);

// 600x600 viewBox, 5% margins. One <path data-part="..."> per boundary part,
// the rest of the algebraic curve dashed, cusps and flat points as markers.
std::string boundary_svg(const kms::BoundaryDiscretization& d);

}  // namespace crouzeix::report
