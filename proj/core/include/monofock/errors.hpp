#pragma once

#include <stdexcept>

namespace monofock {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (bad length, out-of-range mode, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A sign word that is required to be a Dyck word is not one.
class InvalidWordError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// A pair partition has interleaved blocks where a non-crossing one is required.
class CrossingPartitionError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// An enumeration was requested above its hard size bound.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// A test function cannot be integrated exactly (polynomial or opaque callable).
class UnsupportedRepresentationError : public Error {
public:
    using Error::Error;
};

} // namespace monofock
