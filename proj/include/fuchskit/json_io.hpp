#pragma once

// JSON schemas shared by the CLI and the test suite.
//
// Representation file:
//   { "genus": g, "cusps": k,
//     "matrices": [ [[[re,im],[re,im]], [[re,im],[re,im]]], ... ],   // a1..ag, b1..bg, c1..ck
//     "labels": ["a1", ...] }                                        // optional
// Matrices are rescaled to determinant 1; inputs with |det| ~ 0 are rejected.
//
// Surgery state:
//   { "genus": g, "points": [ {"label": "p", "cone": {"num": 4, "den": 1}}
//                           | {"label": "q", "chart": {...}} ] }
// with angles as exact {num, den} multiples of pi and charts as
//   {"kind": "power", "exponent": [re, im]} |
//   {"kind": "parabolic_log", "n": n} | {"kind": "branched_cover", "n": n}.
//
// Twin specification:
//   { "source": "p", "alpha": {"num": 2, "den": 1}, "beta": {...},
//     "endpoints": ["q1", null] }                                    // null = regular point
//
// Complex numbers are [re, im] pairs everywhere.

#include <string>

#include <json.hpp>

#include "fuchskit/surface_rep.hpp"
#include "fuchskit/surgery.hpp"

namespace fuchskit {

using Json = nlohmann::ordered_json;

Json cplxToJson(Cplx z);
Cplx cplxFromJson(const Json& j);

Json matrixToJson(const MoebiusElement& m);

SurfaceRepresentation representationFromJson(const Json& j);
Json representationToJson(const SurfaceRepresentation& rep);

Json chartToJson(const ChartModel& chart);
ChartModel chartFromJson(const Json& j);

Json piRationalToJson(const PiRational& r);
PiRational piRationalFromJson(const Json& j);

Json surgeryStateToJson(const SurgeryState& state);
SurgeryState surgeryStateFromJson(const Json& j);

Json twinSpecToJson(const TwinSpec& twins);
TwinSpec twinSpecFromJson(const Json& j);

// FNV-1a 64-bit digest of the raw input bytes, hex-encoded.
std::string fnv1aDigest(const std::string& bytes);

Json parseJsonText(const std::string& text); // wraps parse errors as ParseError
Json loadJsonFile(const std::string& path);

} // namespace fuchskit
