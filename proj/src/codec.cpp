#include "strtree/codec.hpp"

#include <vector>

namespace strtree {

std::string describe(const validation_report& report) {
    if (report.valid) return "ok";
    return std::string(kind_name(report.kind)) + " at position " + std::to_string(report.position);
}

namespace {

using error = validation_report::error;

// Shared preamble: whole-string alphabet check first, then the root letter.
// Returns a failing report, or ok() to continue the structural scan.
validation_report check_letters(std::string_view text) {
    if (text.empty()) return validation_report::fail(error::truncated_string, 0);
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!is_tree_letter(text[i])) return validation_report::fail(error::bad_alphabet, i);
    if (text[0] != 'Y') return validation_report::fail(error::bad_root, 0);
    return validation_report::ok();
}

}  // namespace

// Level-order reading: after the root, the string is a sequence of sibling
// groups [xy]*[XY], one per pending parent; each y/Y adds a pending parent.
validation_report validate_bfs(std::string_view text) {
    validation_report pre = check_letters(text);
    if (!pre.valid) return pre;
    const std::size_t n = text.size();
    if (n == 1) return validation_report::ok();

    std::size_t pending = 1;  // groups owed to parents seen so far
    std::size_t group_start = 0;
    bool in_group = false;
    for (std::size_t i = 1; i < n; ++i) {
        if (!in_group) {
            if (pending == 0) return validation_report::fail(error::extra_characters, i);
            in_group = true;
            group_start = i;
        }
        char c = text[i];
        if (letter_has_children(c)) ++pending;
        if (letter_is_last(c)) {
            in_group = false;
            --pending;
        }
    }
    if (in_group) return validation_report::fail(error::unterminated_group, group_start);
    if (pending > 0) return validation_report::fail(error::truncated_string, n);
    return validation_report::ok();
}

// Preorder reading: each letter either deepens (y, Y open a child list) or
// retreats (X, Y close one); the walk must end exactly at depth 0. Accepts
// the same set of strings as validate_bfs — both counters move identically —
// but attributes early termination differently.
validation_report validate_dfs(std::string_view text) {
    validation_report pre = check_letters(text);
    if (!pre.valid) return pre;
    const std::size_t n = text.size();
    if (n == 1) return validation_report::ok();

    std::size_t open = 1;  // ancestors whose final child is still unseen
    for (std::size_t i = 1; i < n; ++i) {
        if (open == 0) return validation_report::fail(error::extra_characters, i);
        char c = text[i];
        if (letter_is_last(c)) --open;
        if (letter_has_children(c)) ++open;
    }
    if (open > 0) return validation_report::fail(error::truncated_string, n);
    return validation_report::ok();
}

validation_report validate(std::string_view text, traversal t) {
    return t == traversal::bfs ? validate_bfs(text) : validate_dfs(text);
}

tree_string tree_string::parse(std::string text, traversal t) {
    validation_report report = validate(text, t);
    if (!report.valid) throw invalid_string_error(report, t);
    return tree_string(std::move(text), t);
}

tree_string encode_bfs(const rooted_ordered_tree& tree) {
    const std::size_t n = tree.node_count();
    std::string text(n, 'Y');
    for (std::size_t v = 1; v < n; ++v)  // node index = BFS rank
        text[v] = make_letter(tree.has_children(v), tree.is_last_child(v));
    return tree_string::parse(std::move(text), traversal::bfs);
}

tree_string encode_dfs(const rooted_ordered_tree& tree) {
    node_order order = preorder(tree);
    const std::size_t n = order.sequence.size();
    std::string text(n, 'Y');
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t v = order.sequence[i];
        text[i] = make_letter(tree.has_children(v), tree.is_last_child(v));
    }
    return tree_string::parse(std::move(text), traversal::dfs);
}

tree_string encode(const rooted_ordered_tree& tree, traversal t) {
    return t == traversal::bfs ? encode_bfs(tree) : encode_dfs(tree);
}

rooted_ordered_tree decode_bfs(const tree_string& s) {
    if (s.traversal_kind() != traversal::bfs)
        throw op_error(op_error::kind::traversal_mismatch,
                       "TraversalMismatch: decode_bfs needs a BFS string");
    const std::string& text = s.text();
    const std::size_t n = text.size();

    // rolling FIFO of parents still owed children; letter i attaches node i
    // to the front parent, and an X/Y retires that parent
    std::vector<std::size_t> parent(n, npos);
    std::vector<std::size_t> parents_queue;
    parents_queue.reserve(n);
    parents_queue.push_back(0);
    std::size_t head = 0;
    for (std::size_t i = 1; i < n; ++i) {
        parent[i] = parents_queue[head];
        if (letter_has_children(text[i])) parents_queue.push_back(i);
        if (letter_is_last(text[i])) ++head;
    }
    return rooted_ordered_tree::from_bfs_parents(std::move(parent));
}

rooted_ordered_tree decode_dfs(const tree_string& s) {
    if (s.traversal_kind() != traversal::dfs)
        throw op_error(op_error::kind::traversal_mismatch,
                       "TraversalMismatch: decode_dfs needs a DFS string");
    const std::string& text = s.text();
    const std::size_t n = text.size();

    detail::linked_forest f;
    f.reserve(n);
    std::size_t root = f.add_node();
    std::vector<std::size_t> open{root};  // ancestors accepting children
    open.reserve(n);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t node = f.add_node();
        f.append_child(open.back(), node);
        if (letter_is_last(text[i])) open.pop_back();
        if (letter_has_children(text[i])) open.push_back(node);
    }
    return detail::build_bfs_normalized(root, f);
}

rooted_ordered_tree decode(const tree_string& s) {
    return s.traversal_kind() == traversal::bfs ? decode_bfs(s) : decode_dfs(s);
}

}  // namespace strtree
