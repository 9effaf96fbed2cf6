#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace catwb {

// Ids that do not resolve, missing composites, duplicate names.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration grew past its configured cap. `attempted` is the number of
// candidates visited when the cap tripped.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string what, std::uint64_t cap, std::uint64_t attempted)
      : std::runtime_error(what + ": enumeration cap " + std::to_string(cap) +
                           " exceeded (" + std::to_string(attempted) + " candidates)"),
        cap_(cap),
        attempted_(attempted) {}

  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t attempted() const noexcept { return attempted_; }

 private:
  std::uint64_t cap_;
  std::uint64_t attempted_;
};

// An operation's precondition does not hold (non-parallel functors, mismatched
// targets, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A construction that must succeed by theory failed its own verification.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace catwb
