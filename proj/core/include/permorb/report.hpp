#pragma once

#include <string>

namespace permorb {

// Outcome of one verification check; `witness` describes the first failure.
struct Report {
  std::string id;
  std::string anchor;
  bool pass = false;
  std::string witness;

  std::string status() const { return pass ? "pass" : "fail"; }
};

}  // namespace permorb
