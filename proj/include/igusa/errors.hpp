#ifndef IGUSA_ERRORS_HPP
#define IGUSA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace igusa {

// Bad input text; `position` is a 0-based offset into the source string.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// An enumeration would exceed the configured point budget.
class BudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A required non-degeneracy check failed and --force was not given.
class DegeneracyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace igusa

#endif
