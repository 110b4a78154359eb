#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace topq {

struct LawResult {
  std::string law;
  bool pass = true;
  std::size_t cases = 0;
  // First counterexample, empty when the law held.
  std::string counterexample;
  // Free-form notes (values, tables) kept in the report either way.
  std::vector<std::string> notes;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;
  double seconds = 0;

  bool pass() const;
};

// axioms, subdivision, products, kunneth, duality, euler, claim, coincidence, witness.
const std::vector<std::string>& suite_names();
// Throws Parse for an unknown suite name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

}  // namespace topq
