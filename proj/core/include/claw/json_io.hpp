#ifndef CLAW_JSON_IO_HPP
#define CLAW_JSON_IO_HPP

#include "claw/instance.hpp"
#include "claw/reduce.hpp"
#include "claw/report.hpp"

#include "json.hpp"

#include <string>

namespace claw {

using json = nlohmann::json;

json to_json(const VertexSet& s);
VertexSet vertexset_from_json(const json& j, int n);

json to_json(const IntervalRepresentation& rep);
IntervalRepresentation interval_from_json(const json& j);

json to_json(const ThickeningSpec& spec);
ThickeningSpec thickening_from_json(const json& j);

json to_json(const JoinAnnotation& ann, int n);
JoinAnnotation join_from_json(const json& j, int n);

/// annotation.json: the instance's structure hints plus the vertex count.
json to_json(const Annotation& ann, int n);
Annotation annotation_from_json(const json& j);

/// coloring.json: a plain array of color indices in vertex order.
json to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

json to_json(const reduce::ReductionTrace& trace, int n);
reduce::ReductionTrace trace_from_json(const json& j, int n);

json to_json(const BoundReport& r);

void write_json_file(const json& j, const std::string& path);
json read_json_file(const std::string& path);

} // namespace claw

#endif
