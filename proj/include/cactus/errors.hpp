#ifndef CACTUS_ERRORS_HPP
#define CACTUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cactus {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidEdge : public Error {
public:
    using Error::Error;
};

class InvalidVertex : public Error {
public:
    using Error::Error;
};

class DuplicateEdge : public Error {
public:
    using Error::Error;
};

class Disconnected : public Error {
public:
    using Error::Error;
};

class NotCactus : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class MalformedGraph6 : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

// Transform preconditions.
class NotCutEdge : public Error {
public:
    using Error::Error;
};

class PendantEndpoint : public Error {
public:
    using Error::Error;
};

class NotACycleBlock : public Error {
public:
    using Error::Error;
};

class NotEndBlock : public Error {
public:
    using Error::Error;
};

class CycleTooSmall : public Error {
public:
    using Error::Error;
};

class MaxNotAtV1 : public Error {
public:
    using Error::Error;
};

class DegenerateOperand : public Error {
public:
    using Error::Error;
};

class G2IsAPath : public Error {
public:
    using Error::Error;
};

class PathTooShort : public Error {
public:
    using Error::Error;
};

} // namespace cactus

#endif // CACTUS_ERRORS_HPP
