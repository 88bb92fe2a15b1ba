#pragma once

#include <stdexcept>
#include <string>

namespace ilab {

// Exit-code taxonomy used by the CLI: 2 parse, 3 contract, 4 algorithm failure.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

struct AlgorithmError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ilab
