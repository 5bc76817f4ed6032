#ifndef FPTLAB_CONTEXT_HPP
#define FPTLAB_CONTEXT_HPP

#include <algorithm>
#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "fptlab/errors.hpp"

namespace fptlab {

inline bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

// Ordered list of distinct variable names. Cheap to copy; the name list is
// shared and never mutated, so polynomials referencing a context can rely
// on its order for the lifetime of the value.
class VarContext {
public:
  VarContext() : names_(std::make_shared<const std::vector<std::string>>()) {}

  explicit VarContext(std::vector<std::string> names) {
    for (const auto& n : names)
      if (!is_identifier(n)) throw domain_error("bad variable name: " + n);
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j]) throw domain_error("duplicate variable name: " + names[i]);
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  // Index of `name`, or npos. Contexts are tiny; linear scan is fine.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
      if ((*names_)[i] == name) return i;
    return npos;
  }

  friend bool operator==(const VarContext& a, const VarContext& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend bool operator!=(const VarContext& a, const VarContext& b) { return !(a == b); }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Union of two contexts: a's variables in order, then b's new ones.
inline VarContext merge_contexts(const VarContext& a, const VarContext& b) {
  std::vector<std::string> names = a.names();
  for (const auto& n : b.names())
    if (a.index_of(n) == VarContext::npos) names.push_back(n);
  return VarContext(std::move(names));
}

inline bool contexts_disjoint(const VarContext& a, const VarContext& b) {
  for (const auto& n : b.names())
    if (a.index_of(n) != VarContext::npos) return false;
  return true;
}

} // namespace fptlab

#endif
