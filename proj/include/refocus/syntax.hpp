#pragma once

#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#if defined(__GLIBC__) && __has_include(<sys/single_threaded.h>)
#include <sys/single_threaded.h>
#endif

namespace refocus {

using Nat = std::uint64_t;

/// Largest literal accepted by the parser.
inline constexpr Nat kMaxLiteral = 0xFFFFFFFFull;

enum class Operator : std::uint8_t { Add, Sub };

inline constexpr Operator kOperators[] = {Operator::Add, Operator::Sub};

char symbol(Operator op) noexcept;

struct Value {
  Nat n = 0;
  friend auto operator<=>(const Value&, const Value&) = default;
};

struct Operation;

namespace detail {
struct OperationNode;
void retain(const OperationNode* n) noexcept;
void release(const OperationNode* n) noexcept;
}  // namespace detail

/// Arithmetic expression: a literal or an operator applied to two subterms.
///
/// Immutable; operation nodes are reference counted and shared between copies.
/// Literals are stored inline and never allocate.
class Term {
public:
  static Term lit(Nat n) noexcept { return Term(n); }
  static Term opr(Term left, Operator op, Term right);

  Term(const Term& other) noexcept : lit_(other.lit_), node_(other.node_) { detail::retain(node_); }
  Term(Term&& other) noexcept : lit_(other.lit_), node_(std::exchange(other.node_, nullptr)) {}
  Term& operator=(const Term& other) noexcept {
    detail::retain(other.node_);
    detail::release(node_);
    lit_ = other.lit_;
    node_ = other.node_;
    return *this;
  }
  Term& operator=(Term&& other) noexcept {
    if (this != &other) {
      detail::release(node_);
      lit_ = other.lit_;
      node_ = std::exchange(other.node_, nullptr);
    }
    return *this;
  }
  ~Term() { detail::release(node_); }

  bool is_literal() const noexcept { return node_ == nullptr; }
  /// Precondition: is_literal().
  Nat literal() const noexcept { return lit_; }
  /// Precondition: !is_literal().
  const Operation& operation() const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_) {
      return a.node_ != nullptr || a.lit_ == b.lit_;
    }
    return a.node_ != nullptr && b.node_ != nullptr && equal_operations(a, b);
  }

private:
  static bool equal_operations(const Term& a, const Term& b) noexcept;

  explicit Term(Nat n) noexcept : lit_(n) {}
  explicit Term(const detail::OperationNode* node) noexcept : node_(node) {}

  Nat lit_ = 0;
  const detail::OperationNode* node_ = nullptr;
};

struct Operation {
  Term left;
  Operator op;
  Term right;
};

namespace detail {

inline bool single_threaded() noexcept {
#if defined(__GLIBC__) && __has_include(<sys/single_threaded.h>)
  return __libc_single_threaded != 0;
#else
  return false;
#endif
}

struct OperationNode {
  mutable std::atomic<std::size_t> refs{1};
  Operation operation;
};

void destroy(const OperationNode* n) noexcept;

inline void retain(const OperationNode* n) noexcept {
  if (n == nullptr) {
    return;
  }
  if (single_threaded()) {
    n->refs.store(n->refs.load(std::memory_order_relaxed) + 1, std::memory_order_relaxed);
  } else {
    n->refs.fetch_add(1, std::memory_order_relaxed);
  }
}

inline void release(const OperationNode* n) noexcept {
  if (n == nullptr) {
    return;
  }
  std::size_t before;
  if (single_threaded()) {
    before = n->refs.load(std::memory_order_relaxed);
    n->refs.store(before - 1, std::memory_order_relaxed);
  } else {
    before = n->refs.fetch_sub(1, std::memory_order_acq_rel);
  }
  if (before == 1) {
    destroy(n);
  }
}

}  // namespace detail

inline const Operation& Term::operation() const noexcept { return node_->operation; }

/// An operator applied to two values: the unit of contraction.
struct PotentialRedex {
  Operator op;
  Value v1;
  Value v2;
  friend bool operator==(const PotentialRedex&, const PotentialRedex&) = default;
};

struct Contractum {
  Term term;
  friend bool operator==(const Contractum&, const Contractum&) = default;
};

struct ContractError {
  std::string message;
  friend bool operator==(const ContractError&, const ContractError&) = default;
};

using ContractumOrError = std::variant<Contractum, ContractError>;

/// Error outcome of normalization.
struct Wrong {
  std::string message;
  friend bool operator==(const Wrong&, const Wrong&) = default;
};

using NormalResult = std::variant<Value, Wrong>;

/// "numerical underflow: -<k>" for a subtraction n1 - n2 with n1 < n2.
std::string underflow_message(Nat minuend, Nat subtrahend);

/// Adds two naturals; throws std::overflow_error if the sum does not fit.
Nat checked_add(Nat a, Nat b);

ContractumOrError contract(const PotentialRedex& pr);

inline Term term_of_value(Value v) noexcept { return Term::lit(v.n); }
Term term_of_potential_redex(const PotentialRedex& pr);

std::size_t op_count(const Term& t) noexcept;

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  /// Byte offset into the source, 0-based.
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// Parses `expr := operand (('+'|'-') operand)*`, left-associative, where an
/// operand is a decimal natural or a parenthesized expr. Throws ParseError.
Term parse(std::string_view src);

/// Prints with single spaces around operators and parentheses around compound
/// operands only; parse(print(t)) == t.
std::string print(const Term& t);
std::string print(const Value& v);
std::string print(const PotentialRedex& pr);
std::string print(const NormalResult& r);

}  // namespace refocus
