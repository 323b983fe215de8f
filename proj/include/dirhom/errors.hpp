#pragma once

#include <stdexcept>
#include <string>

namespace dirhom {

// Construction-time graph violations.
struct SelfLoopRejected : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadVertex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DuplicateArc : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadWidth : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact linear algebra misuse.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct FieldError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Homology computations.
struct BadDegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct TooLargeForOracle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text-format ingestion; line is 1-based.
struct ParseError : std::runtime_error {
    ParseError(std::size_t line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
    std::size_t line;
};

}  // namespace dirhom
