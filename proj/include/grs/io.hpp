#pragma once

#include <map>
#include <optional>
#include <string>

#include "grs/affine.hpp"

namespace grs {

// Parse failures carry a line:col position (syntax) or a JSON pointer
// (structure) in the message.
struct ParseError : InvalidInput {
  using InvalidInput::InvalidInput;
};

inline constexpr const char* kFormatVersion = "1";

struct SystemDocument {
  std::string kind;  // "finite" | "affine"
  std::optional<FiniteRootSystem> finite;
  std::optional<AffinePresentation> affine;
  std::map<std::string, std::string> metadata;
};

SystemDocument make_document(const FiniteRootSystem& r, std::map<std::string, std::string> metadata = {});
SystemDocument make_document(const AffinePresentation& p, std::map<std::string, std::string> metadata = {});

SystemDocument parse_document(const std::string& text);
// Canonical text: roots and fibers in sorted order, rationals as "p/q".
std::string serialize(const SystemDocument& doc);

}  // namespace grs
