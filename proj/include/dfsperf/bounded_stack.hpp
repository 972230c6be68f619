#pragma once

#include <cassert>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <type_traits>

namespace dfsperf {

// Fixed-capacity LIFO. Storage is allocated once and never grows, so
// references to elements stay valid for the lifetime of the stack.
template <class T>
class BoundedStack {
  static_assert(std::is_trivially_copyable_v<T>);

 public:
  explicit BoundedStack(std::size_t capacity)
      : data_(capacity ? new T[capacity] : nullptr), capacity_(capacity) {}

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::size_t free_slots() const noexcept { return capacity_ - size_; }

  void push(T value) {
    if (size_ == capacity_) throw std::logic_error("push on a full BoundedStack");
    data_[size_++] = value;
  }

  // Caller has already established free_slots() > 0.
  void push_unchecked(T value) noexcept {
    assert(size_ < capacity_);
    data_[size_++] = value;
  }

  // Extends the stack by k uninitialised slots and returns the first one.
  // Caller has already established free_slots() >= k.
  T* grow_unchecked(std::size_t k) noexcept {
    assert(k <= capacity_ - size_);
    T* region = data_.get() + size_;
    size_ += k;
    return region;
  }

  T pop() noexcept {
    assert(size_ > 0);
    return data_[--size_];
  }

  T& top() noexcept {
    assert(size_ > 0);
    return data_[size_ - 1];
  }
  const T& top() const noexcept {
    assert(size_ > 0);
    return data_[size_ - 1];
  }

  void clear() noexcept { size_ = 0; }

  // Bottom-to-top view of the current contents.
  std::span<const T> contents() const noexcept { return {data_.get(), size_}; }

 private:
  std::unique_ptr<T[]> data_;
  std::size_t capacity_;
  std::size_t size_ = 0;
};

}  // namespace dfsperf
