#pragma once

#include <stdexcept>
#include <string>

namespace flowforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graphcore
struct LoopRejected : Error {
    explicit LoopRejected(int v)
        : Error("loop at vertex " + std::to_string(v) + " rejected") {}
};
struct VertexOutOfRange : Error {
    VertexOutOfRange(int v, int n)
        : Error("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")") {}
};
struct UnknownEdge : Error {
    explicit UnknownEdge(int e) : Error("unknown edge id " + std::to_string(e)) {}
};
struct UnknownVertex : Error {
    explicit UnknownVertex(int v) : Error("unknown vertex id " + std::to_string(v)) {}
};
struct EmptyOrFullSide : Error {
    EmptyOrFullSide() : Error("cut side must be a proper nonempty vertex subset") {}
};
struct ParseError : Error {
    size_t offset;
    ParseError(const std::string& what, size_t off)
        : Error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};
struct Graph6MultiEdgeUnsupported : Error {
    Graph6MultiEdgeUnsupported()
        : Error("graph6 cannot encode parallel edges") {}
};

// connectivity
struct TooSmall : Error {
    explicit TooSmall(const std::string& what) : Error(what) {}
};
struct SameVertex : Error {
    SameVertex() : Error("endpoints must be distinct") {}
};
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

// treepack
struct Disconnected : Error {
    Disconnected() : Error("graph must be connected") {}
};

// orient
struct NotZeroSum : Error {
    NotZeroSum() : Error("boundary function does not sum to zero") {}
};
struct PreOrientationMismatch : Error {
    explicit PreOrientationMismatch(const std::string& what) : Error(what) {}
};
struct BadModulus : Error {
    explicit BadModulus(int m) : Error("modulus must be odd and >= 3, got " + std::to_string(m)) {}
};
struct IncompleteOrientation : Error {
    IncompleteOrientation() : Error("orientation does not cover every edge exactly once") {}
};

// gadgets
struct IdenticalAnchors : Error {
    IdenticalAnchors() : Error("anchor vertices must be distinct") {}
};
struct MissingEdges : Error {
    explicit MissingEdges(const std::string& what) : Error(what) {}
};
struct MissingAnchors : Error {
    explicit MissingAnchors(const std::string& what) : Error(what) {}
};
struct TooManyEdges : Error {
    explicit TooManyEdges(size_t k) : Error("expected between 1 and 3 edges, got " + std::to_string(k)) {}
};

// cli
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

}  // namespace flowforge
