#pragma once

// Readable gtest failure messages for library types.

#include <ostream>

#include "weyldiag/root_system.hpp"

namespace weyldiag {
inline void PrintTo(const Root& r, std::ostream* os) { *os << r.to_string(); }
inline void PrintTo(const WeylElement& w, std::ostream* os) { *os << w.to_string(); }
}  // namespace weyldiag
