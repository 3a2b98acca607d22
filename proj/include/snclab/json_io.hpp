#pragma once

#include "snclab/delta_complex.hpp"
#include "snclab/presentation.hpp"
#include "snclab/resolution.hpp"
#include "snclab/seifert.hpp"
#include "snclab/snc.hpp"
#include "snclab/voronoi.hpp"

#include "json.hpp"

#include <string>

namespace snclab {

using Json = nlohmann::json;

/// Reads and parses a JSON file; throws Error with the path on failure.
Json read_json_file(const std::string& path);

// ---- readers --------------------------------------------------------------

/// {"dim": k, "cells": [0-cells, [[faces of edge], ...], ...], "labels": [...]}.
/// The 0-cell entry may be a count or a list (its length is the count).
DeltaComplex complex_from_json(const Json& j);

/// {"generators": n, "relators": [[1, -2, ...], ...]}.
Presentation presentation_from_json(const Json& j);

/// Rationals as strings ("1/2", "0.25") or integers.
Rational rational_from_json(const Json& j);

/// {"dim": m, "sites": [["1/2", "0"], ...]}.
SiteSet sites_from_json(const Json& j);

/// {"simplices": [[vertex, ...], ...]}.
Region region_from_json(const Json& j, std::size_t dimension);

/// {"I": [...], "m": int, "F": [[label, exp], ...]}.
LocalModel local_model_from_json(const Json& j);

/// A single model, a list of models, or {"roots": [...]}.
std::vector<LocalModel> local_models_from_json(const Json& j);

/// {"d": int, "h": [...]}.
BaseCohomology base_from_json(const Json& j);

/// {"k": int, "c": {"2": n, ...}, "iM": int | "inf"}.
H2Decomposition decomposition_from_json(const Json& j);

/// {"c": [[modulus, turns], [modulus, turns], [modulus, turns]]}.
std::array<PolarRational, 3> pillow_from_json(const Json& j);

// ---- writers --------------------------------------------------------------

Json to_json(const Rational& q);
Json to_json(const QVector& v);
Json to_json(const AbelianGroup& g);
Json to_json(const DeltaComplex& k);
Json to_json(const Presentation& p);
Json to_json(const VoronoiComplex& vc);
Json to_json(const SubspaceReport& r);
Json to_json(const SncModel& m);
Json to_json(const LocalModel& m);
Json to_json(const Mdeg& d);
Json to_json(const ResolutionTrace& t, bool summary_only);
Json to_json(const H2Decomposition& h);

/// Key-sorted, two-space indented, newline-terminated.
std::string render_json(const Json& j);

/// One "path: value" line per scalar leaf, in key order.
std::string render_text(const Json& j);

} // namespace snclab
