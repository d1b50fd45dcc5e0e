#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cliffq/catalog.hpp"
#include "cliffq/qform.hpp"

namespace cliffq {

/// A parsed input file: exactly one of a form or a net over one field.
struct InputDocument {
  Field field;
  std::optional<QForm> form;
  std::optional<QuadricNet> net;
};

/// Parses the JSON input format. A catalog report envelope
/// ({"command": "catalog", "payload": {"document": ...}}) is unwrapped.
/// Throws InvalidDocument, or the parse errors of the polynomial grammar.
InputDocument parse_document(std::string_view text);

/// Canonical JSON text for a document (sorted keys, two-space indent).
std::string document_json(const InputDocument& doc);

/// "x:y:z" with integer or fraction entries. Throws InvalidPoint.
FiberPoint parse_point(std::string_view text, Field field);

}  // namespace cliffq
