#ifndef AGR_ERRORS_HPP
#define AGR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace agr {

/// Base class for every error thrown by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or invalid input document (CLI exit code 1).
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

/// A series fit could not stabilize within the supplied data (exit code 2).
class not_stabilized : public error {
public:
    explicit not_stabilized(const std::string& what) : error(what) {}
};

/// A documented precondition of an operation was violated (exit code 3).
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what) : error(what) {}
};

class not_member : public precondition_error {
public:
    explicit not_member(const std::string& what) : precondition_error(what) {}
};

class not_submodule : public precondition_error {
public:
    explicit not_submodule(const std::string& what) : precondition_error(what) {}
};

class not_primary : public precondition_error {
public:
    explicit not_primary(const std::string& what) : precondition_error(what) {}
};

class wrong_dimension : public precondition_error {
public:
    explicit wrong_dimension(const std::string& what) : precondition_error(what) {}
};

} // namespace agr

#endif
