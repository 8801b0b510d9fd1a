#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "refocus/syntax.hpp"

namespace refocus {

/// The nine normalizers of the tower.
enum class SemanticsChoice { Direct, Cps3, Cps2, KkRb, KkRf, KcRb, KcRf, Machine, BigStep };

inline constexpr std::array<SemanticsChoice, 9> kAllSemantics = {
    SemanticsChoice::Direct, SemanticsChoice::Cps3, SemanticsChoice::Cps2,
    SemanticsChoice::KkRb,   SemanticsChoice::KkRf, SemanticsChoice::KcRb,
    SemanticsChoice::KcRf,   SemanticsChoice::Machine, SemanticsChoice::BigStep};

/// Command-line name: direct, cps3, cps2, kk-rb, kk-rf, kc-rb, kc-rf, machine, bigstep.
std::string_view name(SemanticsChoice s) noexcept;
std::optional<SemanticsChoice> semantics_from_name(std::string_view name) noexcept;

NormalResult normalize_with(SemanticsChoice s, const Term& t);

/// Deforestation measurements for one input.
struct BenchRow {
  std::size_t k = 0;
  std::size_t rb_visits = 0;
  std::size_t rf_visits = 0;
  std::size_t rb_recompose = 0;
  std::size_t rf_recompose = 0;
  std::size_t machine_steps = 0;
  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

BenchRow bench_chain(std::size_t k);

}  // namespace refocus
