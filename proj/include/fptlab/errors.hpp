#ifndef FPTLAB_ERRORS_HPP
#define FPTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fptlab {

// Violated mathematical precondition (theorem hypothesis, domain bound, ...).
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual or JSON input.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fptlab

#endif
