#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symgeo {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// All failures in the library surface as this exception type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace symgeo
