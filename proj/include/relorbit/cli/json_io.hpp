#pragma once

#include <json.hpp>

#include "relorbit/checkerboard/checkerboard.hpp"
#include "relorbit/error.hpp"
#include "relorbit/experiments/experiments.hpp"
#include "relorbit/slit_surface/slit_surface.hpp"

namespace relorbit::cli {

using Json = nlohmann::ordered_json;

// {"torus": {"a": "1", "alpha": "golden"}, "N": "1", "tremor": ["1", "0"]}
slit_surface::ELocusSurface surface_from_json(const Json& j);
Json surface_to_json(const slit_surface::ELocusSurface& s);

// {"decimal": "...", "exact": "..."}
Json scalar_json(const exact_numbers::Real& x);
Json vector_json(const flat_torus::Vec2& v);
Json tuple_json(const slit_surface::PeriodTuple& t);
Json checkerboard_json(const checkerboard::Checkerboard& cb);
Json record_json(const experiments::RecurrenceRecord& r);
Json verdict_json(const experiments::RecurrenceVerdict& v);
Json verdict_json(const exact_numbers::ApproximabilityVerdict& v);
Json error_json(const Error& e);

}  // namespace relorbit::cli
