#ifndef KACSPEC_ERROR_HPP
#define KACSPEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kacspec {

/// Raised when an identity the library asserts unconditionally fails.
/// Catching one of these means a formula was transcribed wrong, not bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace kacspec

#endif // KACSPEC_ERROR_HPP
