#pragma once

#include "pathsum/report.hpp"

#include <optional>
#include <span>
#include <string>

namespace pathsum::render {

/// Scene for the ASCII walk diagram. Rows cover positions lo..hi (increasing
/// upward), columns cover steps 0..steps. A left step from position p is
/// drawn as '/' on the row of p+1, a right step from p as '\' on the row of
/// p. The barrier row is dashed. With `reflected_tail`, the part of the path
/// after its last barrier visit is also drawn mirrored across the barrier.
struct GridScene {
  long steps = 0;
  long lo = 0;
  long hi = 0;
  std::string path;  // 'L'/'R' per step; may be empty
  std::optional<long> barrier;
  bool reflected_tail = false;
};

/// Deterministic monospace rendering; identical scenes give identical bytes.
std::string render_walk(const GridScene& scene);

/// Scene sized to fit the path (and mirror tail when requested).
GridScene scene_for_path(long steps, std::string path, std::optional<long> barrier,
                         bool reflected_tail);

enum class ReportFormat { csv, jsonl };

/// One serialized report line, no trailing newline. Rationals print as
/// "p/q" ("p" for integers), diverging sides as "pole", absent fields stay
/// empty (CSV) or null (JSON lines).
std::string format_report_row(const CheckReport& report, ReportFormat format);

/// CSV: header `identity,n,m,r,lhs,rhs,status` then one row per report.
/// JSON lines: one object per report with the same keys.
std::string emit_report(std::span<const CheckReport> reports, ReportFormat format);

}  // namespace pathsum::render
