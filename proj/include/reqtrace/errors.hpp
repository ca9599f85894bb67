#pragma once

#include <stdexcept>
#include <string>

namespace reqtrace {

/// Base class for all reqtrace errors. `DataError` covers malformed or
/// inconsistent input content, `IoFailure` covers filesystem problems;
/// the CLI maps them to distinct exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public Error {
public:
    using Error::Error;
};

class IoFailure : public Error {
public:
    using Error::Error;
};

class MalformedRecord : public DataError {
public:
    using DataError::DataError;
};

class MalformedLink : public DataError {
public:
    using DataError::DataError;
};

class DuplicateId : public DataError {
public:
    using DataError::DataError;
};

class EmptyInput : public DataError {
public:
    using DataError::DataError;
};

class EmptyCorpus : public DataError {
public:
    using DataError::DataError;
};

class EmptyAnswerSet : public DataError {
public:
    using DataError::DataError;
};

class DimensionMismatch : public DataError {
public:
    using DataError::DataError;
};

class MissingVector : public DataError {
public:
    using DataError::DataError;
};

class IndexOutOfRange : public DataError {
public:
    using DataError::DataError;
};

class UnknownTerm : public DataError {
public:
    using DataError::DataError;
};

class UnresolvedId : public DataError {
public:
    using DataError::DataError;
};

}  // namespace reqtrace
