#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pawclock::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class KeyKind { real, integer, text, list, tolerance };

struct ConfigKey {
  std::string name;
  std::string default_value;
  KeyKind kind;
  std::string help;
  bool runtime = false;  // excluded from the echo and the hash (paths, run ids, thread counts)
};

// Flat key=value experiment configuration. Values are kept as text and
// parsed on access; validate() parses every key once up front.
class ExperimentConfig {
 public:
  ExperimentConfig();

  static const std::vector<ConfigKey>& schema();

  /// Sets `key` (unknown keys throw ConfigError).
  void set(const std::string& key, const std::string& value);
  /// Parses "key = value" lines; '#' starts a comment.
  void load_file(const std::string& path);
  /// KEY=VAL; KEY may omit the "tol." prefix.
  void set_tolerance_override(const std::string& assignment);

  bool is_set(const std::string& key) const { return explicit_.count(key) > 0; }
  const std::string& text(const std::string& key) const;
  double real(const std::string& key) const;
  int integer(const std::string& key) const;
  std::vector<double> list(const std::string& key) const;
  std::uint64_t seed() const;

  std::map<std::string, double> tolerances() const;

  /// Throws ConfigError on any malformed value, non-positive tolerance or empty grid.
  void validate() const;

  /// Sorted key=value lines for every non-runtime key.
  std::string echo() const;
  /// FNV-1a of echo(), as 16 hex digits.
  std::string hash() const;

 private:
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> explicit_;
};

}  // namespace pawclock::cli
