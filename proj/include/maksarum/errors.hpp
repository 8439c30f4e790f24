#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maksarum {

// Every failure raised by the library derives from this type so callers can
// catch one thing at the boundary (the CLI does exactly that).
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public error {
public:
    parse_error(std::string text, std::size_t position, const std::string& reason)
        : error("cannot parse '" + text + "' at position " + std::to_string(position) + ": " + reason),
          text_(std::move(text)), position_(position) {}

    const std::string& text() const noexcept { return text_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string text_;
    std::size_t position_;
};

class domain_error : public error {
public:
    using error::error;
};

class irregular_number : public error {
public:
    using error::error;
};

class not_a_perfect_square : public error {
public:
    using error::error;
};

class contract_violation : public error {
public:
    using error::error;
};

class underflow_error : public error {
public:
    using error::error;
};

class non_divisor_generator : public error {
public:
    using error::error;
};

class non_integer_sides : public error {
public:
    using error::error;
};

class degenerate_generator : public error {
public:
    using error::error;
};

}  // namespace maksarum
