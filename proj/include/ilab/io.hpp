#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ilab/cover.hpp"
#include "ilab/detect.hpp"
#include "ilab/fitter.hpp"
#include "ilab/gen.hpp"
#include "ilab/incidence.hpp"

namespace ilab {

using Json = nlohmann::ordered_json;

/// Scene format:
///   {"lines":   [{"p": [x, y, z], "q": [x, y, z]}, ...],
///    "circles": [{"normal": [..], "offset": r, "center": [..], "r2": r}, ...]}
/// Rationals are strings "n/d" or "n", or JSON integers. Errors are
/// ParseError with a JSON-pointer location.
Scene parse_scene(const std::string& text);
Scene read_scene_file(const std::string& path);
Json scene_to_json(const Scene& s);

Json to_json(const Rational& q);
Json to_json(const QuadExt& x);
Json to_json(const Point3& p);
Json to_json(const MultiPoly& poly);
Json to_json(const IncidenceReport& rep);
Json to_json(const SurfaceFit& fit);
Json to_json(const CoverResult& res);
Json to_json(const std::vector<StructuredFamily>& families);
Json to_json(const BoundReport& rep);
Json to_json(const QuarticReport& rep);
Json to_json(const PruneResult& res);

/// One row per point: x, y, z as "a+b*sqrt(d)", then ';'-joined line and circle ids.
std::string incidences_csv(const IncidenceReport& rep);

/// Pretty JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace ilab
