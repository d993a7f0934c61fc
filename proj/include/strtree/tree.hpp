#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strtree/errors.hpp"

namespace strtree {

// Rooted tree with significant sibling order. Node labels are always the
// BFS (level-order) indices 0..n-1, root = 0; every constructor normalizes
// to that labelling. Consequences used throughout:
//   - parent(v) < v for every non-root v,
//   - the children of any node are a consecutive index range.
class rooted_ordered_tree {
public:
    // default = the 1-node tree
    rooted_ordered_tree() : parent_{npos}, child_first_{1, 1} {}

    std::size_t node_count() const noexcept { return parent_.size(); }

    // npos for the root
    std::size_t parent(std::size_t v) const { return parent_[v]; }

    // children of v are exactly the indices [child_begin(v), child_end(v))
    std::size_t child_begin(std::size_t v) const { return child_first_[v]; }
    std::size_t child_end(std::size_t v) const { return child_first_[v + 1]; }
    std::size_t child_count(std::size_t v) const { return child_end(v) - child_begin(v); }
    bool has_children(std::size_t v) const { return child_begin(v) < child_end(v); }

    bool is_last_child(std::size_t v) const {
        return v != 0 && v + 1 == child_end(parent_[v]);
    }

    const std::vector<std::size_t>& parents() const noexcept { return parent_; }

    bool operator==(const rooted_ordered_tree& other) const noexcept {
        return parent_ == other.parent_;
    }

    // Builds from a parent vector already in BFS labelling (parent[0] = npos,
    // parent[v] < v, parent values non-decreasing — equivalently: siblings
    // consecutive). Throws std::invalid_argument if the invariant fails.
    static rooted_ordered_tree from_bfs_parents(std::vector<std::size_t> parent);

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> child_first_;  // size n+1, monotone
};

enum class order_kind : std::uint8_t { bfs, preorder };

struct node_order {
    std::vector<std::size_t> sequence;  // permutation of 0..n-1, sequence[0] = 0
    order_kind kind;
};

node_order bfs_order(const rooted_ordered_tree& tree);
node_order preorder(const rooted_ordered_tree& tree);

// Parenthesis text: each "(...)" is a node, nesting = child relation,
// whitespace ignored. Throws parse_error.
rooted_ordered_tree from_parentheses(std::string_view text);
std::string to_parentheses(const rooted_ordered_tree& tree);

// Edge list with arbitrary string labels; sibling order is first-mention
// order. An explicit root declaration permits the degenerate empty list
// (the 1-node tree). Throws parse_error.
rooted_ordered_tree from_edge_list(
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::optional<std::string>& declared_root = std::nullopt);

// Edge-list file format: one "parent child" pair per line; any line of the
// form "root <label>" instead declares the root, so "root" itself cannot be
// used as a parent label. A declaration alone denotes the 1-node tree; one
// that contradicts the edges (or a second declaration) is MultipleRoots.
rooted_ordered_tree read_edge_list_text(std::string_view text);
std::string write_edge_list_text(const rooted_ordered_tree& tree);

// Uniform over the Catalan(n-1) ordered trees with n nodes, deterministic
// in (n, seed). Cycle-lemma construction: a uniformly shuffled word of n
// up-steps and n-1 down-steps has exactly one strictly-dominating rotation;
// dropping its first step leaves a uniform random Dyck word = the root's
// forest in preorder. Throws op_error{invalid_size} when n = 0.
rooted_ordered_tree random_ordered_tree(std::size_t n, std::uint64_t seed);

// edges on the longest root-to-leaf path; 0 for the 1-node tree
std::size_t tree_depth(const rooted_ordered_tree& tree);
std::size_t leaf_count(const rooted_ordered_tree& tree);

namespace detail {

// Scratch forest in linked (first_child / next_sibling, npos-terminated)
// form; parsers and decoders build here in whatever node order the input
// dictates, then BFS-renumber once at the end.
struct linked_forest {
    std::vector<std::size_t> first_child;
    std::vector<std::size_t> last_child;
    std::vector<std::size_t> next_sibling;

    void reserve(std::size_t n) {
        first_child.reserve(n);
        last_child.reserve(n);
        next_sibling.reserve(n);
    }

    std::size_t add_node() {
        first_child.push_back(npos);
        last_child.push_back(npos);
        next_sibling.push_back(npos);
        return first_child.size() - 1;
    }

    void append_child(std::size_t parent, std::size_t child) {
        if (last_child[parent] == npos)
            first_child[parent] = child;
        else
            next_sibling[last_child[parent]] = child;
        last_child[parent] = child;
    }
};

// BFS-renumbers the forest rooted at `root`; sibling order is preserved.
rooted_ordered_tree build_bfs_normalized(std::size_t root, const linked_forest& forest);

}  // namespace detail

}  // namespace strtree
