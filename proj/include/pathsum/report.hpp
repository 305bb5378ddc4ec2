#pragma once

#include "pathsum/eps_poly.hpp"
#include "pathsum/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace pathsum {

enum class Status { equal, unequal, pole, skipped };

std::string_view to_string(Status s);

/// Outcome of checking one identity/decomposition/recursion instance at one
/// parameter point. `note` carries diagnostics (skip reasons) and is not part
/// of the serialized formats.
struct CheckReport {
  std::string id;
  long n = 0;
  std::optional<exact::Rational> m;
  std::optional<exact::Rational> r;
  std::optional<exact::LimitValue> lhs;
  std::optional<exact::LimitValue> rhs;
  Status status = Status::skipped;
  std::string note;
};

}  // namespace pathsum
