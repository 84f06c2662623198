#ifndef CHROMASTAT_ERRORS_HPP
#define CHROMASTAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chromastat {

// Malformed graph input. Messages name the offending line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    explicit ParseError(const std::string& what)
        : std::runtime_error(what), line_(0) {}

    int line() const { return line_; }

private:
    int line_;
};

// Instance exceeds a configured vertex limit. Exact-only policy: refuse,
// never fall back to a heuristic answer.
class SizeCapError : public std::runtime_error {
public:
    SizeCapError(int vertices, int cap)
        : std::runtime_error("instance too large: " + std::to_string(vertices) +
                             " vertices exceeds cap of " + std::to_string(cap)),
          vertices_(vertices),
          cap_(cap) {}

    int vertices() const { return vertices_; }
    int cap() const { return cap_; }

private:
    int vertices_;
    int cap_;
};

}  // namespace chromastat

#endif
