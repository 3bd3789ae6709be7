#pragma once

// Re-derivation of every numerical claim the library is built around, one
// check per acceptance criterion. Used by `repulsion reproduce` and by the
// acceptance test binary.

#include <optional>
#include <string>
#include <vector>

namespace repulsion {

struct ClaimResult {
  int criterion = 0;
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct ReproduceOptions {
  std::optional<std::string> only;  ///< restrict to one group
  unsigned workers = 1;
};

/// Group names, in criterion order.
std::vector<std::string> claim_groups();

/// Throws std::invalid_argument for an unknown `only` group.
std::vector<ClaimResult> run_claims(const ReproduceOptions& options = {});

/// "[PASS] AC<n> <group>: <name> (<seconds>s) <detail>"
std::string format_claim(const ClaimResult& r);

}  // namespace repulsion
