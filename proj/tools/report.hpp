#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace crysref::cli {

enum class Status { Pass, Fail, Unknown };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "unknown";
  }
}

inline Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "unknown") return Status::Unknown;
  throw std::invalid_argument("bad status '" + s + "'");
}

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string method;
  std::string detail;
  std::optional<std::string> certificate;

  bool operator==(const Check&) const = default;
};

struct RunReport {
  static constexpr int kSchema = 1;

  std::string command;
  std::vector<Check> checks;
  /// Plain data printed by the command (abelian invariants, exported text, ...).
  std::vector<std::string> output;
  double wall_time_s = 0;
  int exit_code = 0;

  /// 0 if every check passed, 1 on any failure, otherwise 2 for any unknown.
  int status_code() const {
    bool unknown = false;
    for (const auto& c : checks) {
      if (c.status == Status::Fail) return 1;
      unknown = unknown || c.status == Status::Unknown;
    }
    return unknown ? 2 : 0;
  }

  bool operator==(const RunReport&) const = default;
};

inline void to_json(nlohmann::json& j, const Check& c) {
  j = {{"name", c.name}, {"status", to_string(c.status)}, {"method", c.method}, {"detail", c.detail}};
  if (c.certificate) j["certificate"] = *c.certificate;
}

inline void from_json(const nlohmann::json& j, Check& c) {
  c.name = j.at("name").get<std::string>();
  c.status = parse_status(j.at("status").get<std::string>());
  c.method = j.value("method", "");
  c.detail = j.value("detail", "");
  c.certificate.reset();
  if (j.contains("certificate")) c.certificate = j.at("certificate").get<std::string>();
}

inline void to_json(nlohmann::json& j, const RunReport& r) {
  j = {{"schema", RunReport::kSchema}, {"command", r.command},     {"checks", r.checks},
       {"output", r.output},          {"wall_time_s", r.wall_time_s}, {"exit_code", r.exit_code}};
}

inline void from_json(const nlohmann::json& j, RunReport& r) {
  if (j.at("schema").get<int>() != RunReport::kSchema) throw std::invalid_argument("unsupported report schema");
  r.command = j.at("command").get<std::string>();
  r.checks = j.at("checks").get<std::vector<Check>>();
  r.output = j.at("output").get<std::vector<std::string>>();
  r.wall_time_s = j.at("wall_time_s").get<double>();
  r.exit_code = j.at("exit_code").get<int>();
}

}  // namespace crysref::cli
