#pragma once

#include <stdexcept>
#include <string>

namespace fst {

/// Base class for all diagnosable failures raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotLatinSquare : Error {
    int row, col;
    NotLatinSquare(int r, int c, const std::string& what) : Error(what), row(r), col(c) {}
};

struct NoIdentity : Error {
    explicit NoIdentity(const std::string& what) : Error(what) {}
};

struct NotAssociative : Error {
    int a, b, c;
    NotAssociative(int a_, int b_, int c_, const std::string& what)
        : Error(what), a(a_), b(b_), c(c_) {}
};

struct NotHomomorphism : Error {
    int k1, k2;
    NotHomomorphism(int k1_, int k2_, const std::string& what) : Error(what), k1(k1_), k2(k2_) {}
};

struct NotUnitary : Error {
    int k;
    NotUnitary(int k_, const std::string& what) : Error(what), k(k_) {}
};

struct BadIdentity : Error {
    explicit BadIdentity(const std::string& what) : Error(what) {}
};

struct PreconditionNotIrreducible : Error {
    explicit PreconditionNotIrreducible(const std::string& what) : Error(what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

struct InvalidP : Error {
    explicit InvalidP(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace fst
