// Exception types carrying machine-readable payloads. Every failure that a
// caller might want to inspect programmatically gets a dedicated type; plain
// argument mistakes use std::invalid_argument.
#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperorient {

namespace detail {
inline std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}
}  // namespace detail

// Text input could not be parsed; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, int line, int column, const std::string& message)
        : std::runtime_error(source + ":" + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + message),
          source_(std::move(source)), line_(line), column_(column) {}

    const std::string& source() const { return source_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string source_;
    int line_;
    int column_;
};

// A combinator would exceed its configured resource cap.
class ResourceCapExceeded : public std::runtime_error {
public:
    ResourceCapExceeded(std::string resource, std::uint64_t required, std::uint64_t cap)
        : std::runtime_error("resource cap exceeded: " + resource + " needs " +
                             std::to_string(required) + ", cap is " + std::to_string(cap)),
          resource_(std::move(resource)), required_(required), cap_(cap) {}

    const std::string& resource() const { return resource_; }
    std::uint64_t required() const { return required_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::string resource_;
    std::uint64_t required_;
    std::uint64_t cap_;
};

// An edge's p-subsets all carry one label, so the zero-degree pipeline
// cannot place the edge anywhere.
class HypothesisViolated : public std::runtime_error {
public:
    HypothesisViolated(int edge_index, std::vector<int> edge)
        : std::runtime_error("edge " + std::to_string(edge_index) + " {" +
                             detail::join_ints(edge) + "} has all p-subsets in one label"),
          edge_index_(edge_index), edge_(std::move(edge)) {}

    int edge_index() const { return edge_index_; }
    const std::vector<int>& edge() const { return edge_; }

private:
    int edge_index_;
    std::vector<int> edge_;
};

// No per-edge ordering avoids the forbidden positions for some edge.
class NoOrderingFound : public std::runtime_error {
public:
    NoOrderingFound(int edge_index, std::vector<int> edge,
                    std::vector<std::pair<std::vector<int>, std::vector<int>>> assignment)
        : std::runtime_error("no admissible ordering for edge " +
                             std::to_string(edge_index) + " {" + detail::join_ints(edge) + "}"),
          edge_index_(edge_index), edge_(std::move(edge)), assignment_(std::move(assignment)) {}

    int edge_index() const { return edge_index_; }
    const std::vector<int>& edge() const { return edge_; }
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& assignment() const {
        return assignment_;
    }

private:
    int edge_index_;
    std::vector<int> edge_;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> assignment_;
};

// A label's subgraph fails the Hall condition; carries the violating family.
class HallViolated : public std::runtime_error {
public:
    HallViolated(std::vector<int> label, std::vector<std::vector<int>> witness,
                 std::uint64_t edges_inside, std::uint64_t bound)
        : std::runtime_error("Hall condition fails for label {" + detail::join_ints(label) +
                             "}: " + std::to_string(edges_inside) + " edges against bound " +
                             std::to_string(bound)),
          label_(std::move(label)), witness_(std::move(witness)),
          edges_inside_(edges_inside), bound_(bound) {}

    const std::vector<int>& label() const { return label_; }
    const std::vector<std::vector<int>>& witness() const { return witness_; }
    std::uint64_t edges_inside() const { return edges_inside_; }
    std::uint64_t bound() const { return bound_; }

private:
    std::vector<int> label_;
    std::vector<std::vector<int>> witness_;
    std::uint64_t edges_inside_;
    std::uint64_t bound_;
};

// An operation's checked precondition fails; carries the offending clique.
class PreconditionFailed : public std::runtime_error {
public:
    explicit PreconditionFailed(std::vector<int> clique, const std::string& message)
        : std::runtime_error(message + " (clique {" + detail::join_ints(clique) + "})"),
          clique_(std::move(clique)) {}

    const std::vector<int>& clique() const { return clique_; }

private:
    std::vector<int> clique_;
};

}  // namespace hyperorient
