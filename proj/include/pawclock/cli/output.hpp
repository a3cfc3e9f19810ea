#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pawclock/cli/config.hpp"

namespace pawclock::cli {

using Json = nlohmann::ordered_json;
using Cell = std::variant<std::string, long long, double>;

class Table {
 public:
  Table() = default;
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<Cell> row);
  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }
  /// Header row plus data rows; doubles as %.17g, fields quoted when needed.
  std::string csv() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

std::string format_double(double x);
std::string csv_field(const std::string& s);

struct ExperimentResult {
  std::string subcommand;
  std::string check_tag;
  bool pass = true;
  Table table;
  Json metrics = Json::object();
  std::vector<std::string> failures;

  /// Records a named assertion; a false condition fails the experiment.
  void require(bool condition, const std::string& what);
};

/// Summary JSON: subcommand, check tag, pass, failures, config hash, seed,
/// tolerances and metrics. No wall-clock data, so reruns are byte-identical.
Json summary_json(const ExperimentResult& r, const ExperimentConfig& cfg);

/// UTC timestamp usable as a directory name.
std::string timestamp_run_id();

/// Writes data.csv, summary.json and config.echo under <root>/<subcommand>/<run_id>/.
std::filesystem::path write_artifacts(const std::filesystem::path& root, const std::string& run_id,
                                      const ExperimentResult& r, const ExperimentConfig& cfg);

}  // namespace pawclock::cli
