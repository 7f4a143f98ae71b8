#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace minaff {

struct VerifyOptions {
  std::string suite = "all";  // root, char, lweight, minaff, graded, all
  int max_rank = 4;
  std::string grid;           // e.g. "B3:m<=3"; empty means the suite default
  std::uint64_t seed = 0;
};

struct VerifyReport {
  std::int64_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what);
  nlohmann::json to_json() const;
};

/// Runs the invariant checks of one suite. Throws Error(InvalidArgument) on a bad
/// suite name or grid.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace minaff
