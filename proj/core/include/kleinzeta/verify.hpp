#pragma once

#include <string>
#include <vector>

#include "kleinzeta/curves.hpp"

namespace kleinzeta {

struct CheckRow {
  std::string suite;
  std::string name;
  std::string detail;
  bool pass = false;
};

// Scale knobs for the verification suites; defaults are the released gate.
struct VerifyOptions {
  Budgets budgets;
  unsigned threads = 0;

  std::uint32_t theorem1_max = 500;        // p bound for ord(p mod 7) != 3
  std::uint32_t theorem1_cubic_max = 100;  // p bound for ord(p mod 7) == 3
  std::uint32_t brute_match_max = 4096;    // q bound for brute vs formula
  std::uint32_t weil_klein_max = 100;      // p bound for Klein zeta Weil checks
  std::uint32_t weil_fc3_max = 1000;       // q bound for n=3 Fermat Weil checks
  std::uint32_t congruence_max = 4096;     // q bound for count congruences
  std::uint32_t hudson_williams_max = 1000;
  std::uint32_t character_field_max = 64;  // q bound for character property checks
  std::uint32_t fc3_prime_max = 200;
  std::uint32_t fc3_q_max = 1024;
  std::uint32_t cover_max = 64;            // q bound for cover audits
  std::uint32_t hecke_max = 2000;          // p bound for Hecke vs Jacobi multisets
  std::uint32_t hecke_norm_max = 10000;    // p bound for |value|^2 = p
};

std::vector<CheckRow> verify_theorem1_suite(const VerifyOptions& opt);
std::vector<CheckRow> verify_counts_suite(const VerifyOptions& opt);
std::vector<CheckRow> verify_weil_suite(const VerifyOptions& opt);
std::vector<CheckRow> verify_congruences_suite(const VerifyOptions& opt);
std::vector<CheckRow> verify_hasse_davenport_suite(const VerifyOptions& opt);
std::vector<CheckRow> verify_characters_suite(const VerifyOptions& opt);
std::vector<CheckRow> verify_fc3_suite(const VerifyOptions& opt);
std::vector<CheckRow> verify_cover_suite(const VerifyOptions& opt);
std::vector<CheckRow> verify_hecke_suite(const VerifyOptions& opt);

const std::vector<std::string>& verify_suite_names();  // excludes "all"
// name may be any suite name or "all"; throws std::invalid_argument otherwise.
std::vector<CheckRow> run_suite(const std::string& name, const VerifyOptions& opt);

}
