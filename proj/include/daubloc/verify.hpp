#pragma once

// Seeded property checks over the library, grouped in suites. These back the
// `verify` subcommand; the unit tests cover the same ground in finer detail.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace daubloc::verify {

struct PropertyResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> examples;  ///< the first few failing cases
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyResult> properties;

  std::size_t checks() const;
  std::size_t failures() const;
};

/// gamma, sets, spectrum, cantor.
const std::vector<std::string>& suite_names();

/// Throws ValidationError for an unknown suite name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed = 20240601);

/// "all" runs every suite in the order of suite_names().
std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed = 20240601);

}  // namespace daubloc::verify
