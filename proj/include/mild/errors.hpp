#ifndef MILD_ERRORS_HPP
#define MILD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mild {

// Malformed textual input (word grammar, series syntax, documents).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quantity is not determined by the data kept below the truncation degree.
// Callers may retry with a higher truncation.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mild

#endif
