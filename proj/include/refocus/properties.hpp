#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "refocus/harness.hpp"
#include "refocus/syntax.hpp"

namespace refocus {

// Exhaustive property checks over finite instance spaces. Each check reports
// how many instances it examined and the first failing one in enumeration
// order. Exceptions thrown by the code under test count as failures.

struct PropertyReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0.0;

  bool passed() const noexcept { return checked > 0 && failures == 0; }
};

inline constexpr EnumSpec kExhaustiveTerms{.max_ops = 3, .max_lit = 3};
inline constexpr RandSpec kRandomTerms{.seed = 42, .count = 1000, .max_ops = 8, .max_lit = 50};
inline constexpr EnumSpec kRefocusContexts{.max_ops = 1, .max_lit = 3, .max_frames = 3};
inline constexpr EnumSpec kRefocusTerms{.max_ops = 2, .max_lit = 3};

// Deforestation thresholds over chain(16), chain(32), chain(64).
inline constexpr std::size_t kDeforestationSizes[] = {16, 32, 64};
inline constexpr double kRbGrowthMin = 3.5;
inline constexpr double kRbGrowthMax = 4.5;
inline constexpr double kRfGrowthMin = 1.8;
inline constexpr double kRfGrowthMax = 2.2;
inline constexpr double kMinVisitRatioAt64 = 8.0;

/// enumerate_terms(kExhaustiveTerms) followed by random_terms(kRandomTerms).
std::vector<Term> standard_terms();

PropertyReport check_reduction_sequences();
PropertyReport check_tower_agreement(const std::vector<Term>& terms);
PropertyReport check_there_and_back(const std::vector<Term>& terms);
PropertyReport check_refocusing(const EnumSpec& contexts, const EnumSpec& terms);
PropertyReport check_io_oi_reversal(const EnumSpec& contexts);
PropertyReport check_corr(const std::vector<Term>& terms);
PropertyReport check_deforestation();
PropertyReport check_fuel_and_budget(const std::vector<Term>& terms);
PropertyReport check_round_trip(const std::vector<Term>& terms);
PropertyReport check_step_decrease(const std::vector<Term>& terms);
PropertyReport check_leftmost_innermost(const std::vector<Term>& terms);
PropertyReport check_fusion_fidelity(const std::vector<Term>& terms);
PropertyReport check_discontinuity(const std::vector<Term>& terms);

/// Every check above on its standard inputs.
std::vector<PropertyReport> run_all_properties();

}  // namespace refocus
