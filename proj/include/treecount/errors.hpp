#pragma once

#include <stdexcept>
#include <string>

namespace treecount {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfLoopRejected : Error {
    using Error::Error;
};
struct InvalidVertex : Error {
    using Error::Error;
};
struct WouldEmptyGraph : Error {
    using Error::Error;
};
struct NothingToIdentify : Error {
    using Error::Error;
};
struct NotConnected : Error {
    using Error::Error;
};
struct TooLargeForBruteForce : Error {
    using Error::Error;
};
struct CutVertexPivot : Error {
    using Error::Error;
};
struct IsolatedPivot : Error {
    using Error::Error;
};
struct NeighborhoodTooLarge : Error {
    using Error::Error;
};
struct TooLargeToCanonicalize : Error {
    using Error::Error;
};
struct InvalidIndex : Error {
    using Error::Error;
};
struct InvalidPartition : Error {
    using Error::Error;
};
struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

}  // namespace treecount
