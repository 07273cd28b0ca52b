#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace walg {

struct CheckFailure {
  std::string check;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::map<std::string, std::size_t> cases;  // per check
  std::vector<CheckFailure> failures;
  std::size_t inconclusive = 0;

  bool passed() const { return failures.empty(); }
};

/// Star split/permutation independence, omega_t against its alternative
/// forms and the Büchi graph, scalar Conway and omega identities,
/// M M^{omega,t} = M^{omega,t}.  `cases` random matrices or pairs per check.
SuiteReport identity_suite(std::uint64_t seed, std::size_t cases = 200);

/// Random strict GNF systems (n <= 3, two letters, boolean and tropical):
/// Kleene iteration, derivation count and induced automaton agree on every
/// word up to max_len.
SuiteReport oracle_suite(std::uint64_t seed, std::size_t systems = 100, std::size_t max_len = 6);

/// Recomputes every entry of a golden file; inputs are resolved relative to it.
SuiteReport examples_suite(const std::string& golden_path);

nlohmann::json report_json(const SuiteReport& r);

}  // namespace walg
