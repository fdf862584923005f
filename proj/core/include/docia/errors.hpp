#pragma once

#include <stdexcept>
#include <string>

namespace docia {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Malformed corpus input: missing fields, duplicate or non-contiguous indices.
class SchemaError : public Error {
public:
    using Error::Error;
};

class DuplicateSegment : public Error {
public:
    using Error::Error;
};

class OutOfOrderSegment : public Error {
public:
    using Error::Error;
};

// Model reply did not contain an extractable "Output" value.
class ParseFailure : public Error {
public:
    using Error::Error;
};

// All retries spent against the backend.
class BackendExhausted : public Error {
public:
    using Error::Error;
};

// HTTP 401/403; never retried.
class AuthError : public Error {
public:
    using Error::Error;
};

class TimeoutError : public Error {
public:
    using Error::Error;
};

// Scripted backend has no entry or rule for the requested call.
class ScriptMiss : public Error {
public:
    using Error::Error;
};

// Translation stage failed even after the zero-context fallback.
class TranslationFailure : public Error {
public:
    using Error::Error;
};

class EmptyReference : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

} // namespace docia
