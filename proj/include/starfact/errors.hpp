#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starfact {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violations on mathematical domains (log of a series with
// constant term != 1, empty partition where n >= 1 is required, ...).
class domain_error : public error {
public:
    using error::error;
};

// Two series combined at different truncation orders.
class order_mismatch_error : public error {
public:
    using error::error;
};

class out_of_range_error : public error {
public:
    using error::error;
};

// Permutations or algebra elements over different ground sets.
class size_mismatch_error : public error {
public:
    using error::error;
};

// A computation would exceed its configured word/size budget.
class resource_limit_error : public error {
public:
    using error::error;
};

// Raised by parsers; position is a 0-based offset into the input.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace starfact
