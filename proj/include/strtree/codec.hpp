#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "strtree/errors.hpp"
#include "strtree/tree.hpp"

namespace strtree {

enum class traversal : std::uint8_t { bfs = 0, dfs = 1 };

inline const char* traversal_name(traversal t) { return t == traversal::bfs ? "BFS" : "DFS"; }

// The four-letter alphabet. Lowercase = no children, uppercase = last child:
//   x (leaf, more siblings follow)   y (has children, more siblings follow)
//   X (leaf, final sibling)          Y (has children, final sibling)
// The numeric value packs as bit 0 = has-children, bit 1 = is-last-child; it
// doubles as the 2-bit wire code and as the ordering x < y < X < Y used for
// enumeration.
enum class node_letter : std::uint8_t { x = 0b00, y = 0b01, X = 0b10, Y = 0b11 };

constexpr bool is_tree_letter(char c) { return c == 'x' || c == 'y' || c == 'X' || c == 'Y'; }
constexpr bool letter_has_children(char c) { return c == 'y' || c == 'Y'; }
constexpr bool letter_is_last(char c) { return c == 'X' || c == 'Y'; }

constexpr char make_letter(bool children, bool last) {
    return last ? (children ? 'Y' : 'X') : (children ? 'y' : 'x');
}

constexpr node_letter letter_code(char c) {
    return static_cast<node_letter>((letter_is_last(c) ? 2u : 0u) |
                                    (letter_has_children(c) ? 1u : 0u));
}

constexpr char letter_char(node_letter l) {
    return make_letter((static_cast<std::uint8_t>(l) & 1u) != 0,
                       (static_cast<std::uint8_t>(l) & 2u) != 0);
}

struct validation_report {
    enum class error : std::uint8_t {
        none,
        bad_alphabet,
        bad_root,
        unterminated_group,
        extra_characters,
        truncated_string,
    };

    bool valid = true;
    error kind = error::none;
    std::size_t position = npos;

    static validation_report ok() { return {}; }
    static validation_report fail(error k, std::size_t pos) { return {false, k, pos}; }

    bool operator==(const validation_report&) const = default;
};

inline const char* kind_name(validation_report::error k) {
    switch (k) {
        case validation_report::error::none: return "None";
        case validation_report::error::bad_alphabet: return "BadAlphabet";
        case validation_report::error::bad_root: return "BadRoot";
        case validation_report::error::unterminated_group: return "UnterminatedGroup";
        case validation_report::error::extra_characters: return "ExtraCharacters";
        case validation_report::error::truncated_string: return "TruncatedString";
    }
    return "ValidationError";
}

// "ok" for a valid report, otherwise e.g. "UnterminatedGroup at position 1"
std::string describe(const validation_report& report);

class invalid_string_error : public std::runtime_error {
public:
    invalid_string_error(validation_report report, traversal t)
        : std::runtime_error(describe(report)), report_(report), traversal_(t) {}

    const validation_report& report() const noexcept { return report_; }
    traversal traversal_kind() const noexcept { return traversal_; }

private:
    validation_report report_;
    traversal traversal_;
};

// Total scans — never throw; the report carries the verdict and the first
// error's kind and position.
validation_report validate_bfs(std::string_view text);
validation_report validate_dfs(std::string_view text);
validation_report validate(std::string_view text, traversal t);

// A string over {x,y,X,Y} together with its traversal reading. Instances
// exist only in validated form: the sole way in is parse(), and the encoders
// route their output through it too.
class tree_string {
public:
    // throws invalid_string_error when validate(text, t) rejects
    static tree_string parse(std::string text, traversal t);

    const std::string& text() const noexcept { return text_; }
    traversal traversal_kind() const noexcept { return traversal_; }
    std::size_t node_count() const noexcept { return text_.size(); }
    node_letter letter(std::size_t i) const { return letter_code(text_[i]); }

    bool operator==(const tree_string&) const = default;

private:
    tree_string(std::string text, traversal t) : text_(std::move(text)), traversal_(t) {}

    std::string text_;
    traversal traversal_ = traversal::bfs;
};

tree_string encode_bfs(const rooted_ordered_tree& tree);
tree_string encode_dfs(const rooted_ordered_tree& tree);
tree_string encode(const rooted_ordered_tree& tree, traversal t);

// Throw op_error{traversal_mismatch} when handed the other reading's string;
// decode() dispatches on the string's own tag.
rooted_ordered_tree decode_bfs(const tree_string& s);
rooted_ordered_tree decode_dfs(const tree_string& s);
rooted_ordered_tree decode(const tree_string& s);

}  // namespace strtree
