#include "refocus/context.hpp"

#include <utility>

namespace refocus {

Context::Context(std::initializer_list<ControlFrame> frames) {
  reserve(frames.size());
  for (auto it = frames.end(); it != frames.begin();) {
    push(*--it);
  }
}

Context::Context(const Context& other) {
  reserve(other.size_);
  const ControlFrame* src = other.data();
  ControlFrame* dst = data();
  for (std::uint32_t i = 0; i < other.size_; ++i) {
    new (dst + i) ControlFrame(src[i]);
  }
  size_ = other.size_;
}

Context& Context::operator=(const Context& other) {
  if (this != &other) {
    Context copy(other);
    *this = std::move(copy);
  }
  return *this;
}

void Context::reserve(std::size_t frames) {
  if (frames <= capacity_) {
    return;
  }
  auto* fresh = static_cast<ControlFrame*>(detail::BlockPool::allocate(frames * sizeof(ControlFrame)));
  ControlFrame* old = data();
  for (std::uint32_t i = 0; i < size_; ++i) {
    new (fresh + i) ControlFrame(std::move(old[i]));
    old[i].~ControlFrame();
  }
  if (heap_ != nullptr) {
    detail::BlockPool::deallocate(heap_, capacity_ * sizeof(ControlFrame));
  }
  heap_ = fresh;
  data_ = fresh;
  capacity_ = static_cast<std::uint32_t>(frames);
}

Context Context::reversed() const {
  Context out;
  out.reserve(size_);
  for (const ControlFrame& f : *this) {
    out.push(f);
  }
  return out;
}

bool operator==(const Context& a, const Context& b) noexcept {
  if (a.size_ != b.size_) {
    return false;
  }
  const ControlFrame* x = a.data();
  const ControlFrame* y = b.data();
  for (std::uint32_t i = 0; i < a.size_; ++i) {
    if (!(x[i] == y[i])) {
      return false;
    }
  }
  return true;
}

std::string print_context(const Context& inside_out) {
  std::string acc = "[]";
  bool atomic = true;
  auto wrap = [](const std::string& s, bool is_atomic) { return is_atomic ? s : "(" + s + ")"; };
  for (const ControlFrame& f : inside_out) {
    if (f.is_left_of()) {
      std::string right = f.right().is_literal() ? print(f.right()) : "(" + print(f.right()) + ")";
      acc = wrap(acc, atomic) + " " + symbol(f.op()) + " " + right;
    } else {
      acc = print(f.left()) + " " + symbol(f.op()) + " " + wrap(acc, atomic);
    }
    atomic = false;
  }
  return acc;
}

}  // namespace refocus
