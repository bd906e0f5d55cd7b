#pragma once

// JSON schemas shared by the CLI and the Python module.
//
//   Landmark        {"m": [x, y], "r": r}
//   Configuration   {"landmarks": [Landmark, ...]}
//   Sequence        {"seq": [a1, ..., al]}
//   Decomposition   {"arcs": [{"start": θ, "end": θ}], "full_circles": k,
//                    "signals": n, "landmarks": [...]}     (landmarks optional)
//   Verdict         {"robust": bool, "violations": [...], ...}
//   Report          {"all_equal": bool, "trials": t, "epsilon": e, "seed": s,
//                    "rng": name, "counterexample": {...} | null, ...}

#include "diskdecomp/decomp.hpp"
#include "diskdecomp/geometry.hpp"
#include "diskdecomp/robustness.hpp"
#include "diskdecomp/sequence.hpp"
#include "diskdecomp/signal.hpp"
#include "diskdecomp/verify.hpp"

#include <json.hpp>

#include <istream>
#include <string>
#include <string_view>

namespace diskdecomp {

using Json = nlohmann::json;

void to_json(Json& j, const Landmark& lm);
void from_json(const Json& j, Landmark& lm);
void to_json(Json& j, const Configuration& cfg);
void from_json(const Json& j, Configuration& cfg);
void to_json(Json& j, const Arc& arc);

/// Comma-separated naturals, e.g. "3,4,3,4". Throws FormatError.
CircularSequence parse_sequence(std::string_view text);

/// {"seq": [...]} or a bare array. Throws FormatError.
CircularSequence sequence_from_json(const Json& j);
Json sequence_json(const CircularSequence& s);

/// Throws FormatError on any schema violation.
Configuration configuration_from_json(const Json& j);
/// Reads a JSON document from a file, or from `in` when `path` is "-".
/// Throws FormatError.
Json load_json(const std::string& path, std::istream& in);
Configuration load_configuration(const std::string& path, std::istream& in);

Json stats_json(const CanonicalFunction& c, std::uint64_t cap = kDefaultEnumerationCap);
Json count_json(const RobustCount& count);
Json decomposition_json(const CombinatorialDecomposition& d, bool with_landmarks);
Json verdict_json(const RobustnessVerdict& v);
Json dof_json(const DoFReport& r);
Json report_json(const PerturbationReport& r);

} // namespace diskdecomp
