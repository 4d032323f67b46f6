#pragma once

#include "topcell/chern.hpp"
#include "topcell/gring.hpp"
#include "topcell/motives.hpp"
#include "topcell/steenrod.hpp"
#include "topcell/thom.hpp"
#include "topcell/witt.hpp"

#include <json.hpp>

#include <string>

namespace topcell {

using Json = nlohmann::json;

/// Integers serialize as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise; both forms parse.
Json int_to_json(const Int& x);
Int json_to_int(const Json& j);

Json ring_to_json(const GradedRing& ring);
RingPtr ring_from_json(const Json& j);

/// Term list [{coeff, monomial}] in descending term order.
Json element_terms_to_json(const RingElement& e);
RingElement element_from_json(const RingPtr& ring, const Json& j);

Json matrix_to_json(const IMat& m);
IMat matrix_from_json(const Json& j);

Json group_to_json(const FgAbGroup& g);
GroupPtr group_from_json(const Json& j);

Json diagram_to_json(const DiagramSpec& spec);
DiagramSpec diagram_from_json(const Json& j);

std::vector<Int> vector_from_json(const Json& j);
Json vector_to_json(const std::vector<Int>& v);

Json surface_to_json(const SurfaceDescriptor& d);
SurfaceDescriptor surface_from_json(const Json& j);
Json curve_to_json(const CurveDescriptor& d);
CurveDescriptor curve_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);

Catalog catalog_from_json(const Json& j);

Json wu_row_to_json(const WuRow& row);
Json eigen_report_to_json(const EigenReport& r);
Json lift_verdict_to_json(const LiftVerdict& v);
Json diagram_report_to_json(const DiagramReport& r);
Json projector_report_to_json(const ProjectorReport& r);
Json pipeline_report_to_json(const PipelineReport& r);
Json thm01_report_to_json(const Thm01Report& r);
Json snf_to_json(const IMat& a, const SnfResult& snf);

/// Parses text as JSON, mapping failures onto errc::parse_error.
Json parse_json(const std::string& text);

}  // namespace topcell
