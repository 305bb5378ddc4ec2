#include "pathsum/render.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pathsum {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::equal: return "equal";
    case Status::unequal: return "unequal";
    case Status::pole: return "pole";
    case Status::skipped: return "skipped";
  }
  return "?";
}

}  // namespace pathsum

namespace pathsum::render {

namespace {

std::vector<long> path_positions(const std::string& path) {
  std::vector<long> pos;
  pos.reserve(path.size() + 1);
  pos.push_back(0);
  for (char c : path) {
    if (c != 'L' && c != 'R') throw std::invalid_argument("path may contain only L and R");
    pos.push_back(pos.back() + (c == 'L' ? 1 : -1));
  }
  return pos;
}

std::size_t last_visit(const std::vector<long>& pos, long barrier) {
  std::size_t last = pos.size();
  for (std::size_t i = 0; i < pos.size(); ++i)
    if (pos[i] == barrier) last = i;
  return last;
}

}  // namespace

GridScene scene_for_path(long steps, std::string path, std::optional<long> barrier,
                         bool reflected_tail) {
  GridScene scene;
  scene.steps = steps;
  scene.barrier = barrier;
  scene.reflected_tail = reflected_tail;
  long lo = 0, hi = 0;
  if (!path.empty()) {
    auto pos = path_positions(path);
    lo = *std::min_element(pos.begin(), pos.end());
    hi = *std::max_element(pos.begin(), pos.end());
    if (reflected_tail && barrier) {
      std::size_t tail = last_visit(pos, *barrier);
      for (std::size_t i = tail; i < pos.size(); ++i) {
        long q = 2 * *barrier - pos[i];
        lo = std::min(lo, q);
        hi = std::max(hi, q);
      }
    }
  }
  if (barrier) {
    lo = std::min(lo, *barrier);
    hi = std::max(hi, *barrier);
  }
  scene.lo = lo;
  scene.hi = hi;
  scene.path = std::move(path);
  return scene;
}

std::string render_walk(const GridScene& scene) {
  if (scene.steps < 0 || scene.hi < scene.lo) throw std::invalid_argument("render_walk: bad scene");
  if (!scene.path.empty() && static_cast<long>(scene.path.size()) != scene.steps)
    throw std::invalid_argument("render_walk: path length must equal the step count");

  const long width = scene.steps + 1;
  const long height = scene.hi - scene.lo + 1;
  std::vector<std::string> cells(static_cast<std::size_t>(height),
                                 std::string(static_cast<std::size_t>(width), ' '));
  auto row_of = [&](long p) { return static_cast<std::size_t>(scene.hi - p); };
  auto in_range = [&](long p) { return p >= scene.lo && p <= scene.hi; };
  auto put = [&](long p, long col, char c) {
    if (!in_range(p)) throw std::domain_error("render_walk: path escapes the position range");
    cells[row_of(p)][static_cast<std::size_t>(col)] = c;
  };

  if (scene.barrier && in_range(*scene.barrier))
    cells[row_of(*scene.barrier)].assign(static_cast<std::size_t>(width), '-');

  if (in_range(0)) put(0, 0, 'o');

  std::vector<long> pos;
  if (!scene.path.empty()) {
    pos = path_positions(scene.path);
    for (long p : pos)
      if (!in_range(p)) throw std::domain_error("render_walk: path escapes the position range");
    for (long i = 0; i < scene.steps; ++i) {
      if (scene.path[static_cast<std::size_t>(i)] == 'L')
        put(pos[static_cast<std::size_t>(i)] + 1, i + 1, '/');
      else
        put(pos[static_cast<std::size_t>(i)], i + 1, '\\');
    }
    if (scene.reflected_tail && scene.barrier) {
      std::size_t tail = last_visit(pos, *scene.barrier);
      for (std::size_t i = tail; i + 1 < pos.size(); ++i) {
        long q = 2 * *scene.barrier - pos[i];
        if (scene.path[i] == 'L')
          put(q, static_cast<long>(i) + 1, '\\');  // mirrored left step descends
        else
          put(q + 1, static_cast<long>(i) + 1, '/');
      }
    }
  }

  std::size_t label_width = 1;
  for (long p = scene.lo; p <= scene.hi; ++p)
    label_width = std::max(label_width, std::to_string(p).size());

  std::string out = "position\n";
  for (long p = scene.hi; p >= scene.lo; --p) {
    std::string label = std::to_string(p);
    out += std::string(label_width - label.size(), ' ');
    out += label;
    out += " |";
    out += cells[row_of(p)];
    out += '\n';
  }
  out += std::string(label_width, ' ');
  out += " +";
  out += std::string(static_cast<std::size_t>(width), '-');
  out += '\n';
  out += std::string(label_width + 2, ' ');
  out += "step 0.." + std::to_string(scene.steps);
  out += '\n';
  return out;
}

namespace {

std::string value_str(const std::optional<exact::LimitValue>& v) {
  if (!v) return "";
  if (exact::is_pole(*v)) return "pole";
  return exact::as_rational(*v).str();
}

std::string opt_str(const std::optional<exact::Rational>& v) { return v ? v->str() : ""; }

std::string json_string_or_null(const std::string& s) {
  // Values are rationals, statuses, and identity names; no escaping needed.
  return s.empty() ? "null" : "\"" + s + "\"";
}

}  // namespace

std::string format_report_row(const CheckReport& rep, ReportFormat format) {
  if (format == ReportFormat::csv) {
    return rep.id + "," + std::to_string(rep.n) + "," + opt_str(rep.m) + "," + opt_str(rep.r) +
           "," + value_str(rep.lhs) + "," + value_str(rep.rhs) + "," + std::string(to_string(rep.status));
  }
  std::string out = "{\"identity\":\"" + rep.id + "\",\"n\":" + std::to_string(rep.n);
  out += ",\"m\":" + json_string_or_null(opt_str(rep.m));
  out += ",\"r\":" + json_string_or_null(opt_str(rep.r));
  out += ",\"lhs\":" + json_string_or_null(value_str(rep.lhs));
  out += ",\"rhs\":" + json_string_or_null(value_str(rep.rhs));
  out += ",\"status\":\"" + std::string(to_string(rep.status)) + "\"}";
  return out;
}

std::string emit_report(std::span<const CheckReport> reports, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::csv) out = "identity,n,m,r,lhs,rhs,status\n";
  for (const auto& rep : reports) {
    out += format_report_row(rep, format);
    out += '\n';
  }
  return out;
}

}  // namespace pathsum::render
