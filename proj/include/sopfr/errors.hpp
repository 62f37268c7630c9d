#pragma once

#include <stdexcept>
#include <string>

namespace sopfr {

// Thrown when an operation would exceed its configured memory or size budget.
// Callers can usually retry through a segmented or sublinear path.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sopfr
