#pragma once

// Basic vocabulary shared by every dynspt header: ids, weights, the error
// hierarchy and overflow-checked distance arithmetic.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dynspt {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::int64_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

enum class Errc {
    duplicate_edge,
    unreachable_vertex,
    id_out_of_range,
    self_loop,
    no_such_edge,
    broken_path,
    empty_queue,
    precondition_violated,
    not_an_increase,
    not_a_decrease,
    overflow,
    merge_unavailable,
    zero_cycle_present,
    cap_exceeded,
    inconsistent_graph,
    infeasible_params,
    invalid_tree,
    syntax_error,
    count_mismatch,
    duplicate_arc,
};

inline const char* errc_name(Errc code) {
    switch (code) {
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::unreachable_vertex: return "UnreachableVertex";
    case Errc::id_out_of_range: return "IdOutOfRange";
    case Errc::self_loop: return "SelfLoop";
    case Errc::no_such_edge: return "NoSuchEdge";
    case Errc::broken_path: return "BrokenPath";
    case Errc::empty_queue: return "EmptyQueue";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::not_an_increase: return "NotAnIncrease";
    case Errc::not_a_decrease: return "NotADecrease";
    case Errc::overflow: return "Overflow";
    case Errc::merge_unavailable: return "MergeUnavailable";
    case Errc::zero_cycle_present: return "ZeroCyclePresent";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::inconsistent_graph: return "InconsistentGraph";
    case Errc::infeasible_params: return "InfeasibleParams";
    case Errc::invalid_tree: return "InvalidTree";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::count_mismatch: return "CountMismatch";
    case Errc::duplicate_arc: return "DuplicateArc";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

class UnreachableVertexError : public Error {
  public:
    explicit UnreachableVertexError(std::vector<Vertex> vertices)
        : Error(Errc::unreachable_vertex, describe(vertices)), vertices_(std::move(vertices)) {}

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

  private:
    static std::string describe(const std::vector<Vertex>& vs) {
        std::string s = "not reachable from source:";
        for (Vertex v : vs) {
            s += ' ';
            s += std::to_string(v);
        }
        return s;
    }

    std::vector<Vertex> vertices_;
};

// Parser failure that knows the 1-based input line it came from.
class SyntaxError : public Error {
  public:
    SyntaxError(Errc code, std::size_t line, const std::string& what)
        : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class CapExceededError : public Error {
  public:
    CapExceededError(std::uint64_t product, std::uint64_t cap)
        : Error(Errc::cap_exceeded, "tight-parent product " + std::to_string(product) + " exceeds cap " +
                                        std::to_string(cap)),
          product_(product) {}

    std::uint64_t product() const noexcept { return product_; }

  private:
    std::uint64_t product_;
};

inline Weight add_checked(Weight a, Weight b) {
    Weight r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error(Errc::overflow, std::to_string(a) + " + " + std::to_string(b));
    }
    return r;
}

inline Weight sub_checked(Weight a, Weight b) {
    Weight r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw Error(Errc::overflow, std::to_string(a) + " - " + std::to_string(b));
    }
    return r;
}

} // namespace dynspt
