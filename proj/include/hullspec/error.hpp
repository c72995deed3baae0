#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hullspec {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation applied outside its mathematical domain (mixed groups,
/// directions on a non-abelian group, incompatible periodic boundary ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Desk-scale budget exceeded (ball radius, enumeration size, grid cost).
class ResourceError : public Error {
public:
    using Error::Error;
};

class RadiusExceeded : public Error {
public:
    RadiusExceeded(std::size_t radius, const std::string& what)
        : Error(what + " (search radius " + std::to_string(radius) + ")"), radius_(radius) {}
    std::size_t radius() const noexcept { return radius_; }

private:
    std::size_t radius_;
};

/// A configuration rule cannot be evaluated that far out.
class ExtendPrefix : public Error {
public:
    explicit ExtendPrefix(std::size_t needed)
        : Error("extend prefix: configuration needs radius " + std::to_string(needed)),
          needed_(needed) {}
    std::size_t needed_radius() const noexcept { return needed_; }

private:
    std::size_t needed_;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(std::size_t budget, const std::string& what)
        : Error(what + " (iteration budget " + std::to_string(budget) + ")"), budget_(budget) {}
    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t budget_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace hullspec
