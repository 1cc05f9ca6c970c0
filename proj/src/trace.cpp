#include "itsdeal/trace.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace itsdeal {

const std::vector<std::string>& trace_columns() {
  static const std::vector<std::string> c = {
      "iter",           "wall_time_s", "value_eps",      "grad_eps_norm", "eps",
      "objective",      "step_alpha",  "Lbar",           "inner_iters",   "backtracks",
      "relative_error", "g_dot_d",     "direction_norm", "decrease_coef", "decrease_ok"};
  return c;
}

void write_trace_csv(std::ostream& os, const HeaderEntries& header, const RunTrace& trace) {
  for (const auto& [k, v] : header) os << "# " << k << '=' << v << '\n';
  for (const auto& [k, v] : trace.header) os << "# run." << k << '=' << v << '\n';
  os << "# meta.status=" << to_string(trace.status) << '\n';
  if (!trace.message.empty()) os << "# meta.message=" << trace.message << '\n';
  os << "# meta.oracle_calls=" << trace.oracle_calls << '\n';

  const auto& cols = trace_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const auto& r : trace.rows) {
    os << r.iter << ',' << fmt17(r.wall_time_s) << ',' << fmt17(r.value_eps) << ','
       << fmt17(r.grad_eps_norm) << ',' << fmt17(r.eps) << ',' << fmt17(r.objective) << ','
       << fmt17(r.step_alpha) << ',' << fmt17(r.Lbar) << ',' << r.inner_iters << ','
       << r.backtracks << ',' << fmt17(r.relative_error) << ',' << fmt17(r.g_dot_d) << ','
       << fmt17(r.direction_norm) << ',' << fmt17(r.decrease_coef) << ',' << r.decrease_ok << '\n';
  }
}

void write_trace_csv(const std::string& path, const HeaderEntries& header, const RunTrace& trace) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write trace file '" + path + "'");
  write_trace_csv(os, header, trace);
  if (!os) throw std::runtime_error("error while writing '" + path + "'");
}

std::string TraceFile::header_value(const std::string& key) const {
  for (const auto& [k, v] : header)
    if (k == key) return v;
  return {};
}

namespace {

double to_real(const std::string& s) {
  if (s == "nan") return kNaN;
  if (s == "inf") return kInf;
  if (s == "-inf") return -kInf;
  return std::strtod(s.c_str(), nullptr);
}

}  // namespace

TraceFile read_trace_csv(std::istream& is) {
  TraceFile t;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      t.header.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
      continue;
    }
    break;  // column row
  }
  const auto& cols = trace_columns();
  {
    std::string expect;
    for (std::size_t i = 0; i < cols.size(); ++i) expect += (i ? "," : "") + cols[i];
    if (line != expect) throw std::runtime_error("trace CSV: unexpected column row '" + line + "'");
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != cols.size()) throw std::runtime_error("trace CSV: bad row '" + line + "'");
    TraceRow r;
    r.iter = std::stol(f[0]);
    r.wall_time_s = to_real(f[1]);
    r.value_eps = to_real(f[2]);
    r.grad_eps_norm = to_real(f[3]);
    r.eps = to_real(f[4]);
    r.objective = to_real(f[5]);
    r.step_alpha = to_real(f[6]);
    r.Lbar = to_real(f[7]);
    r.inner_iters = std::stoi(f[8]);
    r.backtracks = std::stoi(f[9]);
    r.relative_error = to_real(f[10]);
    r.g_dot_d = to_real(f[11]);
    r.direction_norm = to_real(f[12]);
    r.decrease_coef = to_real(f[13]);
    r.decrease_ok = std::stoi(f[14]);
    t.rows.push_back(r);
  }
  return t;
}

TraceFile read_trace_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open trace file '" + path + "'");
  return read_trace_csv(is);
}

}  // namespace itsdeal
