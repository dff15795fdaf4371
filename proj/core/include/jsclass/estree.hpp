#pragma once

/// @file estree.hpp
/// @brief Loads Esprima-compatible ESTree JSON documents into AstNode trees.

#include <string>
#include <string_view>

#include "jsclass/ast.hpp"
#include "jsclass/diagnostics.hpp"

namespace jsclass {

struct IngestReport {
  std::size_t files_loaded = 0;
  std::size_t nodes_loaded = 0;
  std::size_t opaque_nodes = 0;
  Diagnostics diagnostics;

  void merge(const IngestReport& other);
};

/// Converts one ESTree JSON document (a Program) into a SourceFile.
///
/// Unsupported node types become Opaque nodes whose typed children are still
/// ingested. Spans come from `loc` when present; line counts are then taken
/// from the largest end line and flagged approximate.
///
/// Throws Error with code bad_json, not_a_program or bad_node.
SourceFile ingest_estree_json(std::string_view document_text, std::string path,
                              IngestReport* report = nullptr, FileId file_id = 0);

}  // namespace jsclass
