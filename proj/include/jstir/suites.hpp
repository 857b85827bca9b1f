#pragma once

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "jstir/posets.hpp"

namespace jstir {

struct Failure {
  std::string case_id;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Failure> failures;  // sorted by case_id

  bool passed() const { return failures.empty(); }
};

// identities, diagonal, posets, bijections, egge, all
const std::vector<std::string>& suite_names();

// Runs a named suite at its default bounds. Throws kInvalidArgument for an
// unknown name.
VerifyReport run_suite(std::string_view name);

VerifyReport verify_identities();
VerifyReport verify_diagonal();
VerifyReport verify_posets();
VerifyReport verify_bijections();
VerifyReport verify_egge();

struct ConjectureVerdict {
  unsigned k = 0;
  unsigned i = 0;
  bool real_rooted = false;
  bool unimodal = false;
};

std::vector<ConjectureVerdict> check_conjecture(unsigned k_max);
VerifyReport conjecture_report(const std::vector<ConjectureVerdict>& verdicts);

// sum_{n>=0} Omega_P(n) t^n and W(t)/(1-t)^{|P|+1} agree through t^order,
// with Omega_P counted by brute force.
bool stanley_identity_holds(const LabeledPoset& p, unsigned order);

// Random poset on 1..max_size elements with distinct labels drawn from
// 1..2*max_size; each pair compatible with a random ordering is related
// with probability `density`.
LabeledPoset random_poset(std::mt19937_64& rng, std::size_t max_size, double density);

nlohmann::json to_json(const VerifyReport& r);
std::string to_text(const VerifyReport& r);

}  // namespace jstir
