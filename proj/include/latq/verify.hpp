#pragma once

#include <latq/jsonio.hpp>

#include <string>
#include <vector>

namespace latq {

struct ClaimResult {
  std::string claim;
  std::string expected;
  std::string computed;
  bool pass;
};

struct Report {
  std::string command;
  std::vector<ClaimResult> results;
  bool all_pass() const;
};

// the full pipeline: A15+ structure, classification, complements, coset data,
// projections, refutations, kissing numbers, minimality
Report verify_paper();

json report_json(const Report& r);
std::string report_text(const Report& r);

}  // namespace latq
