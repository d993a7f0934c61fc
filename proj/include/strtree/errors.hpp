#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strtree {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Thrown by the textual tree parsers (parenthesis and edge-list inputs).
class parse_error : public std::runtime_error {
public:
    enum class kind {
        unbalanced_parens,
        empty_input,
        trailing_garbage,
        cycle_detected,
        multiple_roots,
        disconnected_node,
        duplicate_child,
    };

    parse_error(kind k, std::size_t position, const std::string& message)
        : std::runtime_error(message), kind_(k), position_(position) {}

    parse_error(kind k, std::string label, const std::string& message)
        : std::runtime_error(message), kind_(k), position_(npos), label_(std::move(label)) {}

    kind error_kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }
    const std::string& label() const noexcept { return label_; }

private:
    kind kind_;
    std::size_t position_;
    std::string label_;
};

inline const char* kind_name(parse_error::kind k) {
    switch (k) {
        case parse_error::kind::unbalanced_parens: return "UnbalancedParens";
        case parse_error::kind::empty_input: return "EmptyInput";
        case parse_error::kind::trailing_garbage: return "TrailingGarbage";
        case parse_error::kind::cycle_detected: return "CycleDetected";
        case parse_error::kind::multiple_roots: return "MultipleRoots";
        case parse_error::kind::disconnected_node: return "DisconnectedNode";
        case parse_error::kind::duplicate_child: return "DuplicateChild";
    }
    return "ParseError";
}

// Argument-level failures of the string operations (not data validation).
class op_error : public std::runtime_error {
public:
    enum class kind {
        traversal_mismatch,
        not_a_leaf,
        index_out_of_range,
        too_large,
        invalid_size,
    };

    op_error(kind k, const std::string& message, std::size_t position = npos)
        : std::runtime_error(message), kind_(k), position_(position) {}

    kind error_kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

private:
    kind kind_;
    std::size_t position_;
};

inline const char* kind_name(op_error::kind k) {
    switch (k) {
        case op_error::kind::traversal_mismatch: return "TraversalMismatch";
        case op_error::kind::not_a_leaf: return "NotALeaf";
        case op_error::kind::index_out_of_range: return "IndexOutOfRange";
        case op_error::kind::too_large: return "TooLarge";
        case op_error::kind::invalid_size: return "InvalidSize";
    }
    return "OpError";
}

}  // namespace strtree
