#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace wog::cli {

struct AnalysisRequest {
  std::string command;
  std::string input;
  // Edge ids from highest to lowest priority; empty means declaration order.
  std::vector<std::string> order;
  std::size_t cap_fiber = 1'000'000;
  std::size_t cap_graver = 200'000;
  bool json = false;
};

const std::vector<std::string> &commands();

// Either a request or the exit code to return right away (help, usage error).
std::variant<AnalysisRequest, int> parse_arguments(int argc, const char *const *argv,
                                                   std::ostream &out, std::ostream &err);

// 0 on success, 1 on input/validation errors, 2 when a resource cap is hit,
// 3 on an internal consistency failure.
int run(const AnalysisRequest &request, std::ostream &out, std::ostream &err);

int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace wog::cli
