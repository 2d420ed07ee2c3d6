#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ntrank {

/// Base of every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value lies outside its admissible range (component outside [0,1], lo > hi).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. Line and field are 1-based; 0 means "not applicable".
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0, std::size_t field = 0)
        : Error(decorate(what, line, field)), line_(line), field_(field) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t field() const noexcept { return field_; }

private:
    static std::string decorate(const std::string& what, std::size_t line, std::size_t field) {
        if (line == 0) return what;
        std::string prefix = "line " + std::to_string(line);
        if (field != 0) prefix += ", field " + std::to_string(field);
        return prefix + ": " + what;
    }

    std::size_t line_;
    std::size_t field_;
};

class EmptyInput : public Error {
public:
    EmptyInput() : Error("empty input: nothing to rank") {}
    using Error::Error;
};

/// collapse() was asked to reduce an interval triplet with a non-degenerate component.
class NotDegenerate : public Error {
public:
    using Error::Error;
};

/// A subset-valued component has no points and no intervals.
class EmptyComponent : public Error {
public:
    using Error::Error;
};

class DuplicateId : public Error {
public:
    using Error::Error;
};

/// Records of different kinds (single-valued, interval, subset) in one dataset or one command.
class MixedKinds : public Error {
public:
    using Error::Error;
};

}  // namespace ntrank
