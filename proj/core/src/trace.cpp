#include "edgeav/trace.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include "edgeav/csv.hpp"
#include "edgeav/errors.hpp"

namespace edgeav {

namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

const char* expected_header(TraceFormat f) {
  return f == TraceFormat::xy ? "timestamp,vehicle_id,x,y,speed" : "timestamp,vehicle_id,lat,lon,speed";
}

bool parse_record(std::string_view line, TraceFormat format, const AreaGrid& grid, TraceRecord& rec) {
  const auto fields = split_csv(line);
  if (fields.size() != 5) return false;
  double a = 0, b = 0;
  if (!parse_i64(fields[0], rec.timestamp)) return false;
  if (rec.timestamp < 0 || rec.timestamp >= kSecondsPerDay) return false;
  const auto id = trim(fields[1]);
  if (id.empty()) return false;
  rec.vehicle_id.assign(id);
  if (!parse_f64(fields[2], a) || !parse_f64(fields[3], b)) return false;
  if (!parse_f64(fields[4], rec.speed_mps)) return false;
  if (rec.speed_mps < 0) return false;
  if (format == TraceFormat::latlon) {
    const auto [x, y] = grid.project(a, b);
    rec.x = x;
    rec.y = y;
  } else {
    rec.x = a;
    rec.y = b;
  }
  return true;
}

}  // namespace

ParseStats parse_trace(std::istream& in, const AreaGrid& grid, TraceFormat format,
                       const RecordSink& sink) {
  std::string line;
  // First non-empty line must be the header for the declared format.
  bool have_header = false;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty()) continue;
    if (t != expected_header(format)) {
      throw format_error("trace file: expected header '" + std::string(expected_header(format)) +
                         "', got '" + std::string(t) + "'");
    }
    have_header = true;
    break;
  }
  if (!have_header) throw format_error("trace file: empty file, expected header");

  ParseStats stats;
  TraceRecord rec;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty()) continue;
    ++stats.data_lines;
    if (!parse_record(t, format, grid, rec)) {
      ++stats.malformed;
      continue;
    }
    const Area* area = grid.locate(rec.x, rec.y);
    if (area) {
      ++stats.tagged;
    } else {
      ++stats.untagged;
    }
    sink(rec, area);
  }

  if (stats.data_lines > 0 && stats.malformed * 2 > stats.data_lines) {
    throw format_error("trace file: " + std::to_string(stats.malformed) + " of " +
                       std::to_string(stats.data_lines) +
                       " lines malformed; this does not look like a trace file");
  }
  return stats;
}

ParseStats parse_trace_file(const std::string& path, const AreaGrid& grid, TraceFormat format,
                            const RecordSink& sink) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open trace file: " + path);
  return parse_trace(in, grid, format, sink);
}

void write_trace_header(std::ostream& out) { out << "timestamp,vehicle_id,x,y,speed\n"; }

void write_trace_record(std::ostream& out, const TraceRecord& rec) {
  out << rec.timestamp << ',' << rec.vehicle_id << ',' << fmt_fixed(rec.x, 2) << ','
      << fmt_fixed(rec.y, 2) << ',' << fmt_fixed(rec.speed_mps, 4) << '\n';
}

}  // namespace edgeav
