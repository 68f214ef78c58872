#pragma once

#include <stdexcept>
#include <string>

namespace weightlab {

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct NotSquare : std::runtime_error {
    explicit NotSquare(const std::string& what) : std::runtime_error(what) {}
};

struct AlgebraMismatch : std::runtime_error {
    explicit AlgebraMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidMonomial : std::runtime_error {
    explicit InvalidMonomial(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct NotDominant : std::invalid_argument {
    explicit NotDominant(const std::string& what) : std::invalid_argument(what) {}
};

struct BadGenerator : std::invalid_argument {
    explicit BadGenerator(const std::string& what) : std::invalid_argument(what) {}
};

struct NoJ : std::logic_error {
    explicit NoJ(const std::string& what) : std::logic_error(what) {}
};

struct WindowOverflow : std::runtime_error {
    explicit WindowOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct Singular : std::runtime_error {
    explicit Singular(const std::string& what) : std::runtime_error(what) {}
};

struct HypothesisViolated : std::invalid_argument {
    explicit HypothesisViolated(const std::string& what) : std::invalid_argument(what) {}
};

struct NotSimple : std::invalid_argument {
    explicit NotSimple(const std::string& what) : std::invalid_argument(what) {}
};

struct Unclassifiable : std::runtime_error {
    explicit Unclassifiable(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownTag : std::invalid_argument {
    explicit UnknownTag(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownFormula : std::invalid_argument {
    explicit UnknownFormula(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace weightlab
