#include "nullkit/parallel.hpp"

#include <cstdlib>
#include <string>

namespace nullkit {

namespace {

std::size_t initial_thread_count() {
  if (const char* env = std::getenv("NULLKIT_THREADS")) {
    try {
      const auto n = std::stoul(env);
      if (n > 0) return n;
    } catch (const std::logic_error&) {
    }
  }
  const auto hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::atomic<std::size_t>& thread_setting() {
  static std::atomic<std::size_t> n{initial_thread_count()};
  return n;
}

}  // namespace

std::size_t thread_count() noexcept { return thread_setting().load(); }

void set_thread_count(std::size_t n) noexcept { thread_setting().store(n == 0 ? 1 : n); }

namespace detail {
bool& in_worker() noexcept {
  thread_local bool flag = false;
  return flag;
}
}  // namespace detail

}  // namespace nullkit
