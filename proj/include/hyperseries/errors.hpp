#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperseries {

// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
};

class index_before_start : public error {
public:
    using error::error;
};

class bound_mismatch : public error {
public:
    using error::error;
};

class not_a_permutation : public error {
public:
    using error::error;
};

class unsupported_ratio : public error {
public:
    using error::error;
};

class unsupported_override : public error {
public:
    using error::error;
};

class degree_limit : public error {
public:
    using error::error;
};

class negative_base : public error {
public:
    using error::error;
};

class non_positive_ratio : public error {
public:
    using error::error;
};

class infinite_value : public error {
public:
    using error::error;
};

/// Parse failure carrying the byte offset into the input where it was detected.
class parse_error : public error {
public:
    parse_error(std::size_t offset, const std::string& what)
        : error(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class syntax_error : public parse_error {
public:
    using parse_error::parse_error;
};

// Well-formed input outside the supported class (e.g. i^i, non-integer exponents).
class unsupported_form : public parse_error {
public:
    using parse_error::parse_error;
};

class bad_bounds : public parse_error {
public:
    using parse_error::parse_error;
};

class non_positive_base : public parse_error {
public:
    using parse_error::parse_error;
};

} // namespace hyperseries
