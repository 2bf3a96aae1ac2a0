#pragma once

// JSON documents: plumbing graphs (format_version 1), surgery presentations,
// graded roots and obstruction reports. Rationals are written as "p/q"
// strings in lowest terms.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "plumbhf/graded_root.hpp"
#include "plumbhf/obstruction.hpp"
#include "plumbhf/tau.hpp"

namespace plumbhf {

using json = nlohmann::json;

inline constexpr int kGraphFormatVersion = 1;

struct GraphDocument {
  PlumbingGraph graph;
  std::optional<std::int64_t> center;
};

GraphDocument graph_document_from_json(const json& doc);
json to_json(const GraphDocument& doc);

SurgeryPresentation presentation_from_json(const json& doc);
json to_json(const SurgeryPresentation& presentation);

json to_json(const GradedRoot& root);
json to_json(const CanonicalBasis& basis);
json to_json(const TauPair& pair);
json to_json(const ObstructionRun& run, const ObstructionContext& ctx);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// 64-bit FNV-1a digest as 16 hex digits.
std::string digest(const std::string& bytes);

}  // namespace plumbhf
