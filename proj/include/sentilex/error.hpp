#ifndef SENTILEX_ERROR_HPP_
#define SENTILEX_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sentilex {

// Base class for all errors raised by the toolkit. Everything that the
// spec calls a "hard error" throws one of these; the CLI maps them to
// exit status 1 with the message on stderr.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed UTF-8 in an input. Carries the byte offset of the first
// offending byte.
class utf8_error : public error {
public:
    utf8_error(std::size_t byte_offset, const std::string& context)
        : error(context + ": malformed UTF-8 at byte offset " +
                std::to_string(byte_offset)),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// Parse error with a 1-based line number.
class parse_error : public error {
public:
    parse_error(std::size_t line, const std::string& message)
        : error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace sentilex

#endif  // SENTILEX_ERROR_HPP_
