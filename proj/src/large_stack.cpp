#include "dfsperf/large_stack.hpp"

#include <pthread.h>

#include <cstdint>
#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>

namespace dfsperf {

std::size_t recursive_stack_bytes(std::int64_t depth) noexcept {
  constexpr std::size_t kBase = std::size_t{16} << 20;
  return kBase + static_cast<std::size_t>(depth < 0 ? 0 : depth) * kRecursiveFrameBytes;
}

namespace {

struct Task {
  const std::function<void()>* fn;
  std::exception_ptr error;
};

void* trampoline(void* arg) {
  auto* task = static_cast<Task*>(arg);
  try {
    (*task->fn)();
  } catch (...) {
    task->error = std::current_exception();
  }
  return nullptr;
}

}  // namespace

void run_with_stack(std::size_t stack_bytes, const std::function<void()>& fn) {
  pthread_attr_t attr;
  if (int rc = pthread_attr_init(&attr); rc != 0) {
    throw std::runtime_error(std::string("pthread_attr_init: ") + std::strerror(rc));
  }
  const std::size_t page = 1 << 16;
  const std::size_t size = (stack_bytes + page - 1) / page * page;
  if (int rc = pthread_attr_setstacksize(&attr, size); rc != 0) {
    pthread_attr_destroy(&attr);
    throw std::runtime_error(std::string("pthread_attr_setstacksize: ") + std::strerror(rc));
  }
  Task task{&fn, nullptr};
  pthread_t thread;
  const int rc = pthread_create(&thread, &attr, trampoline, &task);
  pthread_attr_destroy(&attr);
  if (rc != 0) throw std::runtime_error(std::string("pthread_create: ") + std::strerror(rc));
  pthread_join(thread, nullptr);
  if (task.error) std::rethrow_exception(task.error);
}

}  // namespace dfsperf
