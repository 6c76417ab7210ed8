#pragma once

#include <stdexcept>
#include <string>

namespace permeq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A word handed to standardize() had repeated entries, or a permutation
// literal failed to parse as a bijection on {1..n}.
struct InvalidWord : Error {
    using Error::Error;
};

struct RankOutOfRange : Error {
    using Error::Error;
};

struct PartitionSpecError : Error {
    using Error::Error;
};

struct IllegalMove : Error {
    using Error::Error;
};

struct NotAnInvolution : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

struct Unsupported : Error {
    using Error::Error;
};

struct NoPublishedData : Error {
    using Error::Error;
};

}  // namespace permeq
