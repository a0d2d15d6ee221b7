#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "ets/charfn.hpp"
#include "ets/density.hpp"
#include "ets/grid.hpp"
#include "ets/measures.hpp"
#include "ets/sampling.hpp"

namespace ets::io {

using nlohmann::json;

// Locale-independent shortest-roundtrip formatting ("%.17g").
std::string format_double(double v);

// {"dim": n, "atoms": [{"x": [...], "w": ...}]}
json to_json(const SpectralMeasure& m);
SpectralMeasure measure_from_json(const json& j);

// {"alpha":..., "lambda":..., "mu":[...], "sigma":[[...]]}
json to_json(const EtsParams& p);
EtsParams ets_params_from_json(const json& j);

// {"alpha":..., "theta":...}
json to_json(const SubordinatorParams& p);
SubordinatorParams subordinator_params_from_json(const json& j);

// {"axes": [{"center":..., "half_width":..., "n":...}]}
json to_json(const GridSpec& g);
GridSpec grid_from_json(const json& j);

// CSV renderings; byte-stable given identical inputs.
std::string batch_csv(const SampleBatch& batch);
std::string density_csv(const DensityGrid& density);

// Write via temp file + rename so readers never see partial output.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace ets::io
