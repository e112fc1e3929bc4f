#pragma once

#include <stdexcept>
#include <string>

namespace sdpmds {

// Domain error: invalid parameters, reducible moduli, mixed algebras,
// singular systems, malformed inputs. Carries a plain message.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sdpmds
