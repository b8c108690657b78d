#ifndef FFCOND_ERRORS_HPP
#define FFCOND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffcond {

/* thrown when an enumeration would exceed a configured cap; callers that can
   degrade (verify tables, brute-force cross-checks) catch this and skip */
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

/* a consistency identity that must hold for every valid input failed;
   indicates a bug, never a usage error */
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what_arg)
        : std::logic_error(what_arg) {}
};

} // namespace ffcond

#endif
