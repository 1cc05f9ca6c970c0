#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "itsdeal/itsdeal.hpp"
#include "itsdeal/objective.hpp"

namespace itsdeal {

enum class ValueType { Real, OptReal, Int, Seed, Bool, String, List, Choice };

struct SchemaEntry {
  std::string key;
  ValueType type;
  std::string default_value;
  std::string help;
  std::vector<std::string> choices;  // for Choice
};

/// Flat `key = value` configuration. Every key has a default; unknown keys
/// and malformed values are rejected with ConfigError.
///
/// Optional reals accept "auto" (or "none") for "derive / not supplied".
/// Lists are comma-separated. The roster is `;`-separated `alg(key=value, ...)`.
class Config {
 public:
  static const std::vector<SchemaEntry>& schema();
  static const SchemaEntry& entry(const std::string& key);

  Config();

  void set(const std::string& key, const std::string& value);
  /// `key=value`, as passed to --set.
  void set_assignment(const std::string& assignment);
  const std::string& get(const std::string& key) const;

  double real(const std::string& key) const;
  std::optional<double> opt_real(const std::string& key) const;
  long integer(const std::string& key) const;
  std::uint64_t seed(const std::string& key) const;
  bool flag(const std::string& key) const;
  std::vector<std::string> list(const std::string& key) const;
  std::vector<double> real_list(const std::string& key) const;

  /// Reads `key = value` lines; blank lines and lines starting with '#' are skipped.
  void parse(std::istream& in, const std::string& source = "<config>");
  void load_file(const std::string& path);
  /// Reads the `# key=value` block at the top of a CSV written by this library.
  /// Keys under meta. and run. are output metadata and ignored.
  static Config from_header(std::istream& in);

  /// Resolved entries in schema order.
  std::vector<std::pair<std::string, std::string>> entries() const;

  bool operator==(const Config& other) const { return values_ == other.values_; }

 private:
  std::vector<std::string> values_;  // parallel to schema()
};

HomeParams home_params(const Config& cfg);
InstanceParams instance_params(const Config& cfg);
RunOptions run_options(const Config& cfg);
SubgradientConfig subgradient_config(const Config& cfg);

struct RosterEntry {
  std::string alg;
  std::vector<std::pair<std::string, std::string>> overrides;
  /// Directory-safe label, e.g. "ideals_p-1.25_omega-3".
  std::string label() const;
  /// Base config with alg and overrides applied.
  Config apply(const Config& base) const;
};

std::vector<RosterEntry> parse_roster(const std::string& text);

}  // namespace itsdeal
