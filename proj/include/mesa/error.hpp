#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mesa {

// Base for every error raised by the library. The CLI maps these to exit
// code 1 (validation failure).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Word of odd (or zero) length: cannot be a Stirling permutation.
class LengthError : public Error {
public:
    explicit LengthError(std::size_t length)
        : Error("word length " + std::to_string(length) +
                " is not a positive even number"),
          length_(length) {}

    std::size_t length() const noexcept { return length_; }

private:
    std::size_t length_;
};

// A value is out of [1, n], or does not occur exactly twice.
class MultisetError : public Error {
public:
    enum class Kind { OutOfRange, Missing, Repeated };

    MultisetError(Kind kind, int value, std::size_t index)
        : Error(describe(kind, value, index)), kind_(kind), value_(value), index_(index) {}

    Kind kind() const noexcept { return kind_; }
    int value() const noexcept { return value_; }
    // 1-based position of the offending letter (0 for Missing).
    std::size_t index() const noexcept { return index_; }

private:
    static std::string describe(Kind kind, int value, std::size_t index) {
        switch (kind) {
        case Kind::OutOfRange:
            return "value " + std::to_string(value) + " at position " +
                   std::to_string(index) + " is out of range";
        case Kind::Missing:
            return "value " + std::to_string(value) + " does not appear twice";
        case Kind::Repeated:
            return "value " + std::to_string(value) + " appears more than twice (position " +
                   std::to_string(index) + ")";
        }
        return "multiset error";
    }

    Kind kind_;
    int value_;
    std::size_t index_;
};

// Some value smaller than k sits between the two copies of k.
class StirlingViolation : public Error {
public:
    StirlingViolation(int k, int interloper)
        : Error("value " + std::to_string(interloper) + " appears between the two copies of " +
                std::to_string(k)),
          k_(k), interloper_(interloper) {}

    int k() const noexcept { return k_; }
    int interloper() const noexcept { return interloper_; }

private:
    int k_;
    int interloper_;
};

// Refusal to exhaust Q_n above the configured ceiling.
class ResourceGuard : public Error {
public:
    ResourceGuard(int order, int ceiling)
        : Error("refusing to enumerate all Stirling permutations of order " +
                std::to_string(order) + " (ceiling " + std::to_string(ceiling) +
                "); an explicit override is required"),
          order_(order), ceiling_(ceiling) {}

    int order() const noexcept { return order_; }
    int ceiling() const noexcept { return ceiling_; }

private:
    int order_;
    int ceiling_;
};

class InvalidMesaSet : public Error {
public:
    using Error::Error;
};

class NotAdmissible : public Error {
public:
    using Error::Error;
};

// M u {n+1} would violate the admissibility bound.
class ExtensionBlocked : public Error {
public:
    ExtensionBlocked(std::size_t size, int order)
        : Error("cannot add " + std::to_string(order + 1) + " to a mesa set of size " +
                std::to_string(size) + " in order " + std::to_string(order) +
                (order % 3 == 2 && size == static_cast<std::size_t>(2 * (order + 1) / 3 - 1)
                     ? " (set already has maximal size 2k-1 for n = 3k-1)"
                     : "")),
          size_(size), order_(order) {}

    std::size_t size() const noexcept { return size_; }
    int order() const noexcept { return order_; }

private:
    std::size_t size_;
    int order_;
};

class NotCoprime : public Error {
public:
    NotCoprime(long long m, long long l)
        : Error("(" + std::to_string(m) + ", " + std::to_string(l) + ") are not coprime") {}
};

class NotMaximal : public Error {
public:
    using Error::Error;
};

class WrongContext : public Error {
public:
    using Error::Error;
};

class InvalidPath : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace mesa
