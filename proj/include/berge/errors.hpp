#pragma once

#include <stdexcept>
#include <string>

namespace berge {

struct NotDivisible : std::domain_error {
    explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

struct ZeroPolynomial : std::domain_error {
    explicit ZeroPolynomial(const std::string& what) : std::domain_error(what) {}
};

struct NotCoprime : std::invalid_argument {
    explicit NotCoprime(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct RingMismatch : std::invalid_argument {
    explicit RingMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct ModulusMismatch : std::invalid_argument {
    explicit ModulusMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct ModulusTooLarge : std::invalid_argument {
    explicit ModulusTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateSurgery : std::invalid_argument {
    explicit DegenerateSurgery(const std::string& what) : std::invalid_argument(what) {}
};

struct TrivialParameter : std::invalid_argument {
    explicit TrivialParameter(const std::string& what) : std::invalid_argument(what) {}
};

struct NotPrimitive : std::invalid_argument {
    explicit NotPrimitive(const std::string& what) : std::invalid_argument(what) {}
};

struct UnitElement : std::invalid_argument {
    explicit UnitElement(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidCoefficient : std::invalid_argument {
    explicit InvalidCoefficient(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace berge
