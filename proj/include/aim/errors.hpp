#ifndef AIM_ERRORS_HPP
#define AIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aim {

// Base class for all library errors so callers can catch aim::Error
// at the CLI boundary and map it to an exit code.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// algebra: reciprocal of a series whose constant term is zero or E-dependent.
struct SingularCoefficient : Error {
    explicit SingularCoefficient(const std::string& msg) : Error(msg) {}
};

// rootfind
struct NoRoots : Error {
    explicit NoRoots(const std::string& msg) : Error(msg) {}
};
struct BadBracket : Error {
    explicit BadBracket(const std::string& msg) : Error(msg) {}
};

// aim_engine
struct OrderExhausted : Error {
    explicit OrderExhausted(const std::string& msg) : Error(msg) {}
};
struct DecoupledSystem : Error {
    explicit DecoupledSystem(const std::string& msg) : Error(msg) {}
};
struct GammaSingular : Error {
    explicit GammaSingular(const std::string& msg) : Error(msg) {}
};
struct PoleOnGrid : Error {
    double x;
    explicit PoleOnGrid(double x_, const std::string& msg) : Error(msg), x(x_) {}
};

// expr
struct LexError : Error {
    std::size_t offset;
    LexError(std::size_t off, const std::string& msg) : Error(msg), offset(off) {}
};
struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg) : Error(msg), position(pos) {}
};
struct UnboundVariable : Error {
    explicit UnboundVariable(const std::string& msg) : Error(msg) {}
};

}  // namespace aim

#endif
