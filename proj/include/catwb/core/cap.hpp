#pragma once

#include <cstdint>
#include <string>

#include "catwb/core/errors.hpp"

namespace catwb {

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// Upper bound on the number of candidate maps any single enumeration may visit.
struct EnumerationCap {
  std::uint64_t limit = kDefaultCap;
};

class CapCounter {
 public:
  CapCounter(EnumerationCap cap, std::string what) : cap_(cap), what_(std::move(what)) {}

  void tick(std::uint64_t n = 1) {
    count_ += n;
    if (count_ > cap_.limit) throw ResourceError(what_, cap_.limit, count_);
  }

  std::uint64_t count() const noexcept { return count_; }

 private:
  EnumerationCap cap_;
  std::string what_;
  std::uint64_t count_ = 0;
};

}  // namespace catwb
