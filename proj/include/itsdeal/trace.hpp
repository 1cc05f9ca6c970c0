#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "itsdeal/itsdeal.hpp"

namespace itsdeal {

using HeaderEntries = std::vector<std::pair<std::string, std::string>>;

/// Column row of every trace CSV.
const std::vector<std::string>& trace_columns();

/// Writes `# key=value` lines (`header`, then the run's own header under run.,
/// then meta.status / meta.message / meta.oracle_calls), the column row and
/// one data row per trace row. Reals use 17 significant digits.
void write_trace_csv(std::ostream& os, const HeaderEntries& header, const RunTrace& trace);
void write_trace_csv(const std::string& path, const HeaderEntries& header, const RunTrace& trace);

struct TraceFile {
  HeaderEntries header;
  std::vector<TraceRow> rows;
  std::string header_value(const std::string& key) const;
};

TraceFile read_trace_csv(std::istream& is);
TraceFile read_trace_csv(const std::string& path);

}  // namespace itsdeal
