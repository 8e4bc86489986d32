#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "netmoment/estimate.hpp"
#include "netmoment/quad.hpp"
#include "netmoment/scene.hpp"

namespace netmoment {

// Shortest decimal that parses back to the same double.
std::string format_double(double v);

// Scene JSON: {"unit_system": "si"|"natural", "height": h,
//              "dipoles": [{"position": [x,y,z], "moment": [m1,m2,m3]}, ...]}
// Errors are std::invalid_argument naming the offending field.
DipoleScene parse_scene(const std::string& json_text);
DipoleScene load_scene(const std::string& path);
std::string scene_to_json(const DipoleScene& scene);

// Field CSV: header x1,x2,weight,b3, one node per row.
void write_field_csv(std::ostream& out, const FieldMap& map);
// The disk radius defaults to sqrt(sum(weight) / pi) when not given.
FieldMap read_field_csv(std::istream& in, std::optional<double> radius = std::nullopt,
                        UnitSystem units = UnitSystem::si);

// Sweep CSV: A,component,order,axis,estimate,true_value,abs_error,predicted_error.
// With a detrend window, m3 rows gain detrended,detrend_applied columns
// (empty for m1/m2 rows).
void write_sweep_csv(std::ostream& out, const SweepResult& result,
                     std::optional<int> detrend_window = std::nullopt);

}  // namespace netmoment
