#pragma once

#include <cstddef>
#include <functional>

namespace hypercert {

/// Fixed-width pool for index-parallel loops.
///
/// `parallel_for` hands out indices from a shared counter, so results must be
/// written to per-index slots; callers never depend on execution order. The
/// first exception thrown by any task is rethrown on the calling thread after
/// all workers have stopped.
class WorkerPool {
 public:
  /// `threads == 0` means one worker per hardware thread.
  explicit WorkerPool(unsigned threads = 1);

  unsigned threads() const { return threads_; }

  void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) const;

  /// Shared single-threaded pool, the default for library calls.
  static const WorkerPool& serial();

 private:
  unsigned threads_;
};

}  // namespace hypercert
