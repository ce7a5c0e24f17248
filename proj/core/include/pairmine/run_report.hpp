#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

namespace pairmine {

inline constexpr std::string_view kToolName = "pairmine";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Deterministic run summary: tool identity, subcommand, config echo, and
// counters. Never carries timestamps or thread counts, so identical inputs
// produce identical report bytes.
class RunReport {
 public:
  explicit RunReport(std::string_view subcommand);

  nlohmann::ordered_json& body() { return body_; }
  void write(const std::string& path) const;

 private:
  nlohmann::ordered_json body_;
};

}  // namespace pairmine
