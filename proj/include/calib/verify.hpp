#pragma once

#include <string>
#include <vector>

#include "calib/g2.hpp"
#include "calib/json_io.hpp"
#include "calib/spin7.hpp"

namespace calib {

struct Check {
  std::string id;
  std::string status;  // "pass" | "fail" | "documented-typo"
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  int passed = 0;
  int failed = 0;
  int typos = 0;
  double elapsed_sec = 0;
};

// Full derivation-based suites. The one-argument forms rebuild every layer
// on top of the supplied structure, so a corrupted structure constant shows
// up as ordinary check failures rather than a crash.
VerificationReport verify_g2();
VerificationReport verify_g2(const G2& g2);
VerificationReport verify_spin7();
VerificationReport verify_spin7(const Spin7& sp);
VerificationReport verify_all();

Json report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r, bool quiet);
int report_exit_code(const VerificationReport& r);

// float comass sampling; returns the maximum |form(frame)| over `samples`
// pseudorandom orthonormal tuples (the only floating-point computation in
// the library)
double comass_sample_g2_assoc(const G2& g2, int samples);
double comass_sample_g2_coassoc(const G2& g2, int samples);
double comass_sample_cayley(const Spin7& sp, int samples);

}  // namespace calib
