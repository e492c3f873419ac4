#ifndef MAHONIA_ERRORS_HPP
#define MAHONIA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mahonia {

/// Malformed textual input (words, multisets, partitions, statistic specs).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation does not hold for the given
/// arguments (parameter out of range, multiset mismatch, hypothesis gate).
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace mahonia

#endif
