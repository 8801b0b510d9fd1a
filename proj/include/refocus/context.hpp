#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <new>
#include <initializer_list>
#include <string>
#include <utility>

#include "refocus/detail/pool.hpp"
#include "refocus/syntax.hpp"

namespace refocus {

/// Hole on the left: `[] op right`, right operand not yet reduced.
struct LeftOf {
  Operator op;
  Term right;
  friend bool operator==(const LeftOf&, const LeftOf&) = default;
};

/// Hole on the right: `left op []`, left operand already a value.
struct RightOf {
  Value left;
  Operator op;
  friend bool operator==(const RightOf&, const RightOf&) = default;
};

/// One layer of a context: either a LeftOf or a RightOf frame.
///
/// Stored as an operator plus one operand term: the pending right operand of a
/// LeftOf, or the left value of a RightOf held as a literal.
class ControlFrame {
public:
  ControlFrame(LeftOf f) noexcept : operand_(std::move(f.right)), op_(f.op), is_left_(true) {}
  ControlFrame(RightOf f) noexcept : operand_(term_of_value(f.left)), op_(f.op), is_left_(false) {}

  bool is_left_of() const noexcept { return is_left_; }
  Operator op() const noexcept { return op_; }
  /// Precondition: is_left_of().
  const Term& right() const noexcept { return operand_; }
  Term take_right() noexcept { return std::move(operand_); }
  /// Precondition: !is_left_of().
  Value left() const noexcept { return Value{operand_.literal()}; }
  /// Turns `[] op r` into `v op []`; returns r. Precondition: is_left_of().
  Term resume_right(Value v) noexcept {
    Term r = std::move(operand_);
    operand_ = term_of_value(v);
    is_left_ = false;
    return r;
  }

  LeftOf left_of() const { return LeftOf{op_, operand_}; }
  RightOf right_of() const noexcept { return RightOf{left(), op_}; }

  friend bool operator==(const ControlFrame&, const ControlFrame&) = default;

private:
  Term operand_;
  Operator op_;
  bool is_left_;
};

/// Plugs `t` into the hole of `f`.
inline Term plug(const ControlFrame& f, Term t) {
  if (f.is_left_of()) {
    return Term::opr(std::move(t), f.op(), f.right());
  }
  return Term::opr(term_of_value(f.left()), f.op(), std::move(t));
}

/// A list of control frames.
///
/// The representation is read two ways: inside-out, where the head is the
/// innermost frame (the order in which decomposition accumulates frames), and
/// outside-in, where the head is the outermost frame. reversed() converts
/// between the two readings. Iteration runs from the head.
class Context {
  // Frames are stored tail-first so that push/pop at the head are O(1). Short
  // contexts live inline.
  static constexpr std::uint32_t kInline = 6;

public:
  using const_iterator = std::reverse_iterator<const ControlFrame*>;

  Context() noexcept = default;
  Context(const Context& other);
  Context(Context&& other) noexcept { steal(other); }
  Context& operator=(const Context& other);
  Context& operator=(Context&& other) noexcept {
    if (this != &other) {
      release();
      steal(other);
    }
    return *this;
  }
  ~Context() { release(); }
  /// Frames listed head first.
  Context(std::initializer_list<ControlFrame> frames);

  bool empty() const noexcept { return size_ == 0; }
  std::size_t size() const noexcept { return size_; }

  const ControlFrame& head() const noexcept { return data()[size_ - 1]; }
  void push(ControlFrame f) { emplace(std::move(f)); }
  void push_left_of(Operator op, const Term& right) { emplace(LeftOf{op, right}); }
  void push_right_of(Value left, Operator op) { emplace(RightOf{left, op}); }
  void pop() noexcept { data()[--size_].~ControlFrame(); }
  /// Removes and returns the head.
  ControlFrame take_head() noexcept {
    ControlFrame* last = data() + --size_;
    ControlFrame f = std::move(*last);
    last->~ControlFrame();
    return f;
  }
  /// Replaces a LeftOf head `[] op r` by `v op []` and returns r.
  /// Precondition: head().is_left_of().
  Term resume_right(Value v) noexcept { return data_[size_ - 1].resume_right(v); }
  void reserve(std::size_t frames);

  const_iterator begin() const noexcept { return const_iterator(data() + size_); }
  const_iterator end() const noexcept { return const_iterator(data()); }

  Context reversed() const;

  friend bool operator==(const Context& a, const Context& b) noexcept;

private:
  ControlFrame* data() noexcept { return data_; }
  const ControlFrame* data() const noexcept { return data_; }
  ControlFrame* inline_data() noexcept { return reinterpret_cast<ControlFrame*>(inline_); }

  template <typename F>
  void emplace(F&& f) {
    if (size_ == capacity_) {
      reserve(std::size_t{capacity_} * 2);
    }
    new (data() + size_) ControlFrame(std::forward<F>(f));
    ++size_;
  }

  void steal(Context& other) noexcept {
    if (other.heap_ != nullptr) {
      heap_ = std::exchange(other.heap_, nullptr);
      data_ = std::exchange(other.data_, other.inline_data());
      size_ = std::exchange(other.size_, 0);
      capacity_ = std::exchange(other.capacity_, kInline);
      return;
    }
    ControlFrame* src = other.data();
    ControlFrame* dst = data_;
    for (std::uint32_t i = 0; i < other.size_; ++i) {
      new (dst + i) ControlFrame(std::move(src[i]));
      src[i].~ControlFrame();
    }
    size_ = std::exchange(other.size_, 0);
  }

  void release() noexcept {
    ControlFrame* d = data();
    for (std::uint32_t i = 0; i < size_; ++i) {
      d[i].~ControlFrame();
    }
    size_ = 0;
    if (heap_ != nullptr) {
      detail::BlockPool::deallocate(heap_, capacity_ * sizeof(ControlFrame));
      heap_ = nullptr;
      data_ = inline_data();
      capacity_ = kInline;
    }
  }

  ControlFrame* heap_ = nullptr;
  ControlFrame* data_ = inline_data();
  std::uint32_t size_ = 0;
  std::uint32_t capacity_ = kInline;
  alignas(ControlFrame) unsigned char inline_[kInline * sizeof(ControlFrame)];
};

/// Renders an inside-out context as a term with the hole written `[]`, e.g.
/// `(1 - []) - (2 - 20)`.
std::string print_context(const Context& inside_out);

}  // namespace refocus
