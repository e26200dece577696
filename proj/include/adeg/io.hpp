#pragma once

#include "adeg/braid.hpp"
#include "adeg/graph.hpp"
#include "adeg/moves.hpp"
#include "adeg/plane.hpp"
#include "adeg/reducer.hpp"
#include "adeg/result.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace adeg {

using ordered_json = nlohmann::ordered_json;

/// Graph text format: `graph signed` header, `v <id>` and `e <u> <v> <+|->`
/// records, `#` comments.
Result<SignedGraph> parse_graph_text(const std::string& text);
std::string write_graph_text(const SignedGraph& g);

/// Plane format: graph format under a `graph plane` header (edge signs
/// optional) plus `dir <tail> <head>`, `rot <v>: <cyclic neighbours>` and
/// `outer <face-index>` records.
Result<PlaneGraph> parse_plane_text(const std::string& text);
std::string write_plane_text(const PlaneGraph& p);

bool looks_like_plane_text(const std::string& text);

/// Lossless transcript round-trip.
struct ParsedTranscript {
    Transcript transcript;
    std::optional<IMat> cert;
};
ordered_json transcript_to_json(const Transcript& t, const IMat* cert = nullptr);
Result<ParsedTranscript> transcript_from_json(const std::string& json_text);

/// DOT with signs as edge labels and dashed negative edges.
std::string to_dot(const SignedGraph& g, const std::string& name);

ordered_json json_of(const Int& v);  // number when it fits, string otherwise
ordered_json json_of(const std::vector<Int>& v);
ordered_json json_of(const IMat& m);
ordered_json json_of(const DefinitenessReport& rep);
ordered_json json_of(const CycleReport& rep);
ordered_json json_of(const MinorCertificate& cert);
ordered_json json_of(const ADEType& t);
ordered_json json_of(const Reduction& red, bool include_certificate);

}  // namespace adeg
