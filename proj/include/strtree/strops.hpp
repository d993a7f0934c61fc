#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strtree/codec.hpp"

namespace strtree {

// unit-cost Levenshtein over the letter sequences; both strings must carry
// the same traversal tag (op_error{traversal_mismatch} otherwise)
std::size_t edit_distance(const tree_string& a, const tree_string& b);

enum class rewrite_mode : std::uint8_t { first, global };

// ECMAScript pattern plus replacement text in std::regex_replace format
// ($1-style capture references)
struct rewrite_rule {
    std::string pattern;
    std::string replacement;
};

struct sed_command {
    rewrite_rule rule;
    rewrite_mode mode;
};

// "s/PATTERN/REPLACEMENT/[g]"; \1-style references and escaped delimiters
// are translated to the std::regex_replace forms. Throws
// std::invalid_argument on malformed syntax.
sed_command parse_sed(std::string_view text);

// substitution produced a string that no longer validates; the input
// tree_string is untouched
class invalid_result_error : public std::runtime_error {
public:
    invalid_result_error(validation_report report, std::string result_text)
        : std::runtime_error("InvalidResult: " + describe(report)),
          report_(report),
          result_(std::move(result_text)) {}

    const validation_report& report() const noexcept { return report_; }
    const std::string& result_text() const noexcept { return result_; }

private:
    validation_report report_;
    std::string result_;
};

// leftmost, non-overlapping textual substitution, then re-validation under
// s's traversal; throws invalid_result_error when the result is malformed
// and std::regex_error when the pattern does not compile
tree_string rewrite(const tree_string& s, const rewrite_rule& rule, rewrite_mode mode);

// Subtree operations live on DFS strings, where every subtree is one
// contiguous substring; BFS-tagged arguments raise
// op_error{traversal_mismatch}.

// Positions whose subtree is structurally identical to the needle. The
// needle's root letter is context-normalized: its has-children flag must
// match, its is-last flag is ignored; a single-node needle matches every
// position.
std::vector<std::size_t> find_subtrees(const tree_string& haystack, const tree_string& needle);

// the subtree rooted at position, as a standalone string (root letter
// renormalized to Y); op_error{index_out_of_range} when position >= n
tree_string extract_subtree(const tree_string& s, std::size_t position);

// Replaces the leaf at position with scion, the scion's root letter taking
// over the leaf's is-last flag. Position 0 is only graftable when the host
// is the 1-node tree; otherwise op_error{not_a_leaf}.
tree_string graft(const tree_string& host, std::size_t position, const tree_string& scion);

// DFS encoding of the tree with every node's children sorted ascending by
// AHU shape code ("(" + sorted child codes + ")"); two strings canonicalize
// equal iff their trees are isomorphic ignoring sibling order. Idempotent.
tree_string canonicalize(const tree_string& s);

// All valid strings of length n in lexicographic order under the letter
// ranking x < y < X < Y; count = Catalan(n-1). op_error{too_large} past the
// guard. The visitor overload streams without materializing the list.
std::vector<tree_string> enumerate_valid(std::size_t n, traversal t, std::size_t guard = 20);
void enumerate_valid(std::size_t n, traversal t,
                     const std::function<void(std::string_view)>& visit,
                     std::size_t guard = 20);

// Number of n-node rooted trees distinct up to sibling order — equivalently
// the number of distinct canonicalize images over ordered n-node trees.
// Computed by the Euler-transform recurrence
//   a(m+1) = (1/m) * sum_{k=1..m} (sum_{d|k} d*a(d)) * a(m-k+1),  a(1) = 1,
// so the guard (default 16) is a policy knob, not a cost ceiling; 64-bit
// overflow caps n at 40 regardless.
std::uint64_t count_canonical(std::size_t n, std::size_t guard = 16);

// reference constants for the asymptotic count A * growth^n * n^(-5/2)
struct otter_constants {
    static constexpr double amplitude = 0.4399;
    static constexpr double growth = 2.996;
};

}  // namespace strtree
