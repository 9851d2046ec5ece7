#pragma once

#include <string>

#include "inclogic/error.hpp"

namespace inclogic {

// Strict differs from Lax only in the disjunction and diamond clauses.
enum class Semantics { Lax, Strict };

inline const char* to_string(Semantics s) { return s == Semantics::Lax ? "lax" : "strict"; }

inline Semantics parse_semantics(const std::string& s) {
  if (s == "lax") return Semantics::Lax;
  if (s == "strict") return Semantics::Strict;
  throw FormatError("unknown semantics '" + s + "' (expected lax or strict)");
}

}  // namespace inclogic
