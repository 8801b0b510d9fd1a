#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <new>

namespace refocus::detail {

// Per-thread caches of freed blocks, one intrusive free list per power-of-two
// size class. Term nodes and context buffers are created and dropped at a very
// high rate by the exhaustive sweeps; recycling them avoids the general-purpose
// allocator. A block freed on a thread other than the one that allocated it
// joins the freeing thread's cache, which is fine since blocks are
// interchangeable.
class BlockPool {
public:
  static constexpr std::size_t kMinShift = 4;   // 16 bytes
  static constexpr std::size_t kMaxShift = 12;  // 4 KiB; larger requests bypass the pool
  static constexpr std::uint32_t kBlocksPerClass = 1 << 14;

  static void* allocate(std::size_t bytes) {
    const std::size_t cls = size_class(bytes);
    if (cls > kMaxShift) {
      return ::operator new(bytes);
    }
    Lists& l = lists;
    if (FreeBlock* b = l.head[cls]) {
      l.head[cls] = b->next;
      --l.count[cls];
      return b;
    }
    return ::operator new(std::size_t{1} << cls);
  }

  static void deallocate(void* p, std::size_t bytes) noexcept {
    const std::size_t cls = size_class(bytes);
    Lists& l = lists;
    if (cls > kMaxShift || l.dead || l.count[cls] == kBlocksPerClass) {
      ::operator delete(p);
      return;
    }
    if (!l.reaper_armed) {
      arm_reaper();
    }
    auto* b = static_cast<FreeBlock*>(p);
    b->next = l.head[cls];
    l.head[cls] = b;
    ++l.count[cls];
  }

private:
  struct FreeBlock {
    FreeBlock* next;
  };

  struct Lists {
    FreeBlock* head[kMaxShift + 1];
    std::uint32_t count[kMaxShift + 1];
    bool reaper_armed;
    bool dead;
  };

  // Releases the cached blocks at thread exit.
  struct Reaper {
    ~Reaper() {
      Lists& l = lists;
      l.dead = true;
      for (FreeBlock*& head : l.head) {
        while (head != nullptr) {
          FreeBlock* next = head->next;
          ::operator delete(head);
          head = next;
        }
      }
    }
  };

  static void arm_reaper() noexcept {
    thread_local Reaper reaper;
    lists.reaper_armed = true;
  }

  static std::size_t size_class(std::size_t bytes) noexcept {
    const std::size_t shift = std::bit_width(std::bit_ceil(bytes == 0 ? 1 : bytes)) - 1;
    return shift < kMinShift ? kMinShift : shift;
  }

  static constinit inline thread_local Lists lists{};
};

template <typename T>
struct PoolAllocator {
  using value_type = T;

  PoolAllocator() = default;
  template <typename U>
  PoolAllocator(const PoolAllocator<U>&) noexcept {}

  T* allocate(std::size_t n) { return static_cast<T*>(BlockPool::allocate(n * sizeof(T))); }
  void deallocate(T* p, std::size_t n) noexcept { BlockPool::deallocate(p, n * sizeof(T)); }

  template <typename U>
  friend bool operator==(const PoolAllocator&, const PoolAllocator<U>&) noexcept {
    return true;
  }
};

}  // namespace refocus::detail
