#pragma once

#include <stdexcept>
#include <string>

namespace corequot::detail {

// Precondition on caller-supplied data.
inline void require(bool cond, const std::string& msg) {
    if (!cond)
        throw std::domain_error(msg);
}

// Internal consistency; a failure means a bug, not bad input.
inline void ensure(bool cond, const std::string& msg) {
    if (!cond)
        throw std::logic_error(msg);
}

}  // namespace corequot::detail
