#ifndef SBS_ERROR_HPP
#define SBS_ERROR_HPP

#include <cstdio>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace sbs {

// Bad input: a precondition or a file/config validation failure.
class ValidationError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// The inputs were valid but the physics has no finite answer
// (singular response denominator, parametric instability, blow-up).
class NumericalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class SingularDenominator : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

class ParametricOscillation : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

namespace detail {

inline std::string concat() { return {}; }

template <typename T, typename... Rest>
std::string concat(const T& head, const Rest&... rest)
{
    if constexpr (std::is_arithmetic_v<T>) {
        // to_string loses precision on doubles.
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", static_cast<double>(head));
        return std::string(buf) + concat(rest...);
    } else {
        return std::string(head) + concat(rest...);
    }
}

} // namespace detail

template <typename... Args>
[[noreturn]] void fail_validation(const Args&... args)
{
    throw ValidationError(detail::concat(args...));
}

} // namespace sbs

#endif // SBS_ERROR_HPP
