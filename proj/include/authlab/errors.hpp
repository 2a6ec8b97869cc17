// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace authlab {

// Base for domain errors. Caller-side precondition violations throw
// std::invalid_argument instead and are not meant to be caught in-protocol.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (bad hex, bad JSON, bad config field).
struct ParseError : Error {
    using Error::Error;
};

struct ZeroNotInvertible : Error {
    ZeroNotInvertible() : Error("zero has no inverse mod p") {}
};

struct NotCoprime : Error {
    explicit NotCoprime(const std::string& what) : Error(what) {}
    NotCoprime() : Error("exponent is not coprime to the group order") {}
};

struct BadIdentityFormat : Error {
    explicit BadIdentityFormat(const std::string& what) : Error(what) {}
    BadIdentityFormat() : Error("identity fails the active format policy") {}
};

struct DegenerateIdentity : Error {
    DegenerateIdentity() : Error("identity reduces to 0, 1 or p-1 mod p") {}
};

// Raised by the awasthi-lal login phase: the card inputs are (ID, PW) but the
// scheme needs SID, which is neither typed in nor stored on the card.
struct MissingSID : Error {
    MissingSID()
        : Error("awasthi-lal login requires SID, which neither the user nor "
                "the smart card can supply") {}
};

struct MalformedRequest : ParseError {
    explicit MalformedRequest(const std::string& what) : ParseError(what) {}
    MalformedRequest() : ParseError("login request does not parse") {}
};

struct EmptyCoalition : Error {
    EmptyCoalition() : Error("group forgery needs at least one pair") {}
};

struct RegistrationRefused : Error {
    explicit RegistrationRefused(const std::string& what) : Error(what) {}
};

struct UnsupportedCombination : Error {
    explicit UnsupportedCombination(const std::string& what) : Error(what) {}
};

}  // namespace authlab
