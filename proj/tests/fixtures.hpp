#pragma once

#include <string>

#include "msplit/verify.hpp"

// Canonical fixtures by name (F1..F5).
inline msplit::Matroid fx(const std::string& name) {
  for (const auto& f : msplit::builtin_fixtures()) {
    if (f.name == name) return f.matroid;
  }
  throw std::runtime_error("unknown fixture " + name);
}
