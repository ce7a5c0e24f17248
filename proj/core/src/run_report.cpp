#include "pairmine/run_report.hpp"

#include <fstream>
#include <stdexcept>

namespace pairmine {

RunReport::RunReport(std::string_view subcommand) {
  body_["tool"] = std::string(kToolName);
  body_["version"] = std::string(kToolVersion);
  body_["subcommand"] = std::string(subcommand);
}

void RunReport::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write run report: " + path);
  out << body_.dump(2) << "\n";
}

}  // namespace pairmine
