#pragma once

#include <stdexcept>
#include <string>

namespace zk {

// Base of every error raised by the library. `kind()` is the stable
// diagnostic name printed by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ZK_DEFINE_ERROR(Name)                                                  \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

ZK_DEFINE_ERROR(VertexOutOfRange);
ZK_DEFINE_ERROR(EmptyFacetList);
ZK_DEFINE_ERROR(GhostVertex);
ZK_DEFINE_ERROR(DegreeOutOfRange);
ZK_DEFINE_ERROR(TorsionPresent);
ZK_DEFINE_ERROR(SchemaError);
ZK_DEFINE_ERROR(TooFewVertices);
ZK_DEFINE_ERROR(BadParameters);
ZK_DEFINE_ERROR(HypothesesNotVerified);
ZK_DEFINE_ERROR(RankMismatch);
ZK_DEFINE_ERROR(TheoremHypothesisViolated);
ZK_DEFINE_ERROR(NonUnimodularPairing);
ZK_DEFINE_ERROR(NotTopDegree);
ZK_DEFINE_ERROR(TopRankNotOne);

#undef ZK_DEFINE_ERROR

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("ParseError", "line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace zk
