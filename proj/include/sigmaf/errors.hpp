#ifndef SIGMAF_ERRORS_HPP_
#define SIGMAF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sigmaf {

/// Two masks (or a mask and a space) built over different universes were combined.
class UniverseMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generating class, probability space or other input violates its invariants.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A desk-scale guard refused to build something too large.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, unsigned long long requested)
      : std::runtime_error(what), requested_(requested) {}

  // Size that was asked for (members, cells or signatures, depending on the guard).
  unsigned long long requested() const { return requested_; }

 private:
  unsigned long long requested_;
};

}  // namespace sigmaf

#endif  // SIGMAF_ERRORS_HPP_
