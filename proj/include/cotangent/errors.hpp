#ifndef COTANGENT_ERRORS_HPP
#define COTANGENT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace cotangent {

/// An exact identity that holds by construction has failed: a dimension was
/// not an integer, a Poincaré coefficient went negative, or an exact
/// division left a remainder. `where()` names the offending degree.
class invariant_violation : public std::logic_error
{
public:
    invariant_violation(const std::string& what, std::string where)
        : std::logic_error(what + " at " + where), where_(std::move(where))
    {
    }

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

} // namespace cotangent

#endif
