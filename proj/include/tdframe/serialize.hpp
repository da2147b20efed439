#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tdframe/construct.hpp"
#include "tdframe/embed.hpp"
#include "tdframe/frames.hpp"
#include "tdframe/srg.hpp"

namespace tdframe {

enum class Format { json, csv, pretty };

std::optional<Format> format_from_string(std::string_view name);

using Json = nlohmann::ordered_json;

// Graphs: {"v": int, "edges": [[i, j], ...]} with i < j.
Adjacency parse_graph_json(std::string_view text);
Json graph_to_json(const Adjacency& a);

// Grams: {"n_rank": int, "N": int, "entries": [[scalar, ...], ...]}.
// Parsing certifies the matrix; a stated n_rank that disagrees with the
// certified rank throws CertificateMismatch.
GramSet parse_gram_json(std::string_view text, std::optional<double> tolerance = std::nullopt);
Json gram_to_json(const GramSet& g);

Json params_to_json(const SrgParams& p);
SrgParams params_from_json(const Json& j);

Json report_to_json(const FrameReport& r);
FrameReport report_from_json(const Json& j);

Json classification_to_json(const Classification& c);
Classification classification_from_json(const Json& j);

std::string serialize_report(const FrameReport& r, Format f);
std::string serialize_report(const Classification& c, Format f);
std::string serialize_reports(const std::vector<Classification>& cs, Format f);

FrameReport parse_report(std::string_view json_text);
Classification parse_classification(std::string_view json_text);

std::string table_to_csv(const std::vector<TableRow>& rows);
std::string serialize_table(const std::vector<TableRow>& rows, Format f);

}  // namespace tdframe
