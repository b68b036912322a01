#pragma once

#include <string>
#include <vector>

namespace parafock {

// Outcome of a verification sweep: how many identities were checked and a
// description of each one that failed.
struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

}  // namespace parafock
