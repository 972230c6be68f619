#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace dfsperf {

// Rough upper bound on the call-stack bytes one recursion level of the
// recursive engines needs (measured frames are well below this).
inline constexpr std::size_t kRecursiveFrameBytes = 160;

// Stack headroom for a recursive traversal of depth up to `depth`.
std::size_t recursive_stack_bytes(std::int64_t depth) noexcept;

// Runs fn on a fresh thread whose stack is at least `stack_bytes`, waits for
// it and rethrows anything it threw. Recursive engines need this once the
// DFS depth outgrows the default process stack.
void run_with_stack(std::size_t stack_bytes, const std::function<void()>& fn);

}  // namespace dfsperf
