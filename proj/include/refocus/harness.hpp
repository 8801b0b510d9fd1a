#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "refocus/context.hpp"
#include "refocus/syntax.hpp"

namespace refocus {

/// Bounds for exhaustive enumeration.
struct EnumSpec {
  std::size_t max_ops = 0;
  Nat max_lit = 0;
  std::size_t max_frames = 0;
};

struct RandSpec {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t max_ops = 0;
  Nat max_lit = 0;
};

/// Every term with at most `max_ops` operators and literals in 0..max_lit,
/// each exactly once. Ordered by operator count, then by left operand (in this
/// same order), then operator (Add before Sub), then right operand.
std::vector<Term> enumerate_terms(const EnumSpec& spec);

/// Every frame whose LeftOf operand has at most one operator and whose
/// literals and RightOf values lie in 0..max_lit. LeftOf frames come first.
std::vector<ControlFrame> enumerate_frames(Nat max_lit);

/// Every frame list of length at most `max_frames` over enumerate_frames,
/// ordered by length, then lexicographically from the head.
std::vector<Context> enumerate_contexts(const EnumSpec& spec);

/// Number of contexts enumerate_contexts would produce.
std::size_t context_count(const EnumSpec& spec);

/// Reproducible pseudo-random terms. Each term starts with an operator budget
/// of max_ops; with budget b > 0 a fair coin picks a literal or an operation,
/// and an operation splits b - 1 between its operands binomially.
std::vector<Term> random_terms(const RandSpec& spec);

/// ((...(1 + 1) + 1) ...) + 1 with k operators.
Term chain(std::size_t k);

}  // namespace refocus
