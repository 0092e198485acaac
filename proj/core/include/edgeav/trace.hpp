#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "edgeav/geometry.hpp"

namespace edgeav {

// One timestamped vehicle observation.
struct TraceRecord {
  std::int64_t timestamp = 0;  // seconds since midnight, [0, 86400)
  std::string vehicle_id;
  double x = 0.0;  // meters east of map origin
  double y = 0.0;  // meters north of map origin
  double speed_mps = 0.0;
};

enum class TraceFormat {
  xy,      // header: timestamp,vehicle_id,x,y,speed
  latlon,  // header: timestamp,vehicle_id,lat,lon,speed (projected at parse time)
};

struct ParseStats {
  std::uint64_t data_lines = 0;
  std::uint64_t malformed = 0;
  std::uint64_t tagged = 0;    // records inside some grid cell
  std::uint64_t untagged = 0;  // records outside every cell
};

// Invoked once per well-formed record; area is nullptr outside the grid.
using RecordSink = std::function<void(const TraceRecord&, const Area*)>;

// Streams a trace file, tagging each record with its containing area.
// Malformed lines are counted and skipped. Throws format_error when the
// header does not match the declared format or when more than half of the
// data lines are malformed (both signal the wrong file).
ParseStats parse_trace(std::istream& in, const AreaGrid& grid, TraceFormat format,
                       const RecordSink& sink);

// Same, from a path. Throws io_error when the file cannot be opened.
ParseStats parse_trace_file(const std::string& path, const AreaGrid& grid, TraceFormat format,
                            const RecordSink& sink);

void write_trace_header(std::ostream& out);
void write_trace_record(std::ostream& out, const TraceRecord& rec);

}  // namespace edgeav
