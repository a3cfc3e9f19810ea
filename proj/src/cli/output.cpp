#include "pawclock/cli/output.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

namespace pawclock::cli {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void Table::add(std::vector<Cell> row) {
  if (row.size() != header_.size()) throw std::invalid_argument("Table::add: row width does not match header");
  rows_.push_back(std::move(row));
}

std::string Table::csv() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) out += (i ? "," : "") + csv_field(header_[i]);
  out += "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      if (const auto* s = std::get_if<std::string>(&row[i]))
        out += csv_field(*s);
      else if (const auto* n = std::get_if<long long>(&row[i]))
        out += std::to_string(*n);
      else
        out += format_double(std::get<double>(row[i]));
    }
    out += "\n";
  }
  return out;
}

void ExperimentResult::require(bool condition, const std::string& what) {
  if (!condition) {
    pass = false;
    failures.push_back(what);
  }
}

Json summary_json(const ExperimentResult& r, const ExperimentConfig& cfg) {
  Json j;
  j["subcommand"] = r.subcommand;
  j["check_tag"] = r.check_tag;
  j["pass"] = r.pass;
  j["failures"] = r.failures;
  j["config_hash"] = cfg.hash();
  j["seed"] = cfg.seed();
  Json tol = Json::object();
  for (const auto& [k, v] : cfg.tolerances()) tol[k] = v;
  j["tolerances"] = tol;
  j["metrics"] = r.metrics;
  return j;
}

std::string timestamp_run_id() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%04d%02d%02dT%02d%02d%02d.%03dZ", tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday,
                tm.tm_hour, tm.tm_min, tm.tm_sec, static_cast<int>(ms));
  return buf;
}

namespace {

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << content;
}

}  // namespace

std::filesystem::path write_artifacts(const std::filesystem::path& root, const std::string& run_id,
                                      const ExperimentResult& r, const ExperimentConfig& cfg) {
  const auto dir = root / r.subcommand / run_id;
  std::filesystem::create_directories(dir);
  write_file(dir / "data.csv", r.table.csv());
  write_file(dir / "summary.json", summary_json(r, cfg).dump(2) + "\n");
  write_file(dir / "config.echo", cfg.echo());
  return dir;
}

}  // namespace pawclock::cli
