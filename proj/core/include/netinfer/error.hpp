#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netinfer {

enum class Errc {
    DuplicateEdge,
    SelfLoop,
    NoSupplyNode,
    NoDemandNode,
    BadIndex,
    BadHopBound,
    NegativeDistance,
    OutOfRangeProbability,
    InvalidParameter,
    MissingFragility,
    InvalidScenarios,
    InfeasibleProbes,
    TooLarge,
    EmptyTrialList,
    BadSize,
    InvariantViolation,
    Parse,
    Io,
    Config,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library. The message names the offending element.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace netinfer
