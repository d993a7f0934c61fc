#include "strtree/tree.hpp"

#include <cctype>
#include <random>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace strtree {

rooted_ordered_tree rooted_ordered_tree::from_bfs_parents(std::vector<std::size_t> parent) {
    const std::size_t n = parent.size();
    if (n == 0 || parent[0] != npos)
        throw std::invalid_argument("from_bfs_parents: node 0 must be the parentless root");
    for (std::size_t v = 1; v < n; ++v) {
        if (parent[v] >= v)
            throw std::invalid_argument("from_bfs_parents: parent index must precede the child");
        if (v >= 2 && parent[v] < parent[v - 1])
            throw std::invalid_argument("from_bfs_parents: parents must be non-decreasing");
    }

    rooted_ordered_tree t;
    t.child_first_.assign(n + 1, 0);
    std::size_t v = 1;
    for (std::size_t u = 0; u < n; ++u) {
        t.child_first_[u] = v;
        while (v < n && parent[v] == u) ++v;
    }
    if (v != n)  // unreachable given the checks above, kept as a guard
        throw std::invalid_argument("from_bfs_parents: children are not consecutive");
    t.child_first_[n] = n;
    t.parent_ = std::move(parent);
    return t;
}

node_order bfs_order(const rooted_ordered_tree& tree) {
    // node indices are BFS indices by construction
    node_order order;
    order.kind = order_kind::bfs;
    order.sequence.resize(tree.node_count());
    for (std::size_t v = 0; v < tree.node_count(); ++v) order.sequence[v] = v;
    return order;
}

node_order preorder(const rooted_ordered_tree& tree) {
    node_order order;
    order.kind = order_kind::preorder;
    order.sequence.reserve(tree.node_count());
    std::vector<std::size_t> stack;
    stack.push_back(0);
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        order.sequence.push_back(v);
        for (std::size_t c = tree.child_end(v); c > tree.child_begin(v); --c)
            stack.push_back(c - 1);
    }
    return order;
}

namespace detail {

rooted_ordered_tree build_bfs_normalized(std::size_t root, const linked_forest& forest) {
    std::vector<std::size_t> queue_old;
    std::vector<std::size_t> parent_new;
    queue_old.reserve(forest.first_child.size());
    parent_new.reserve(forest.first_child.size());
    queue_old.push_back(root);
    parent_new.push_back(npos);
    for (std::size_t head = 0; head < queue_old.size(); ++head) {
        for (std::size_t c = forest.first_child[queue_old[head]]; c != npos;
             c = forest.next_sibling[c]) {
            queue_old.push_back(c);
            parent_new.push_back(head);
        }
    }
    return rooted_ordered_tree::from_bfs_parents(std::move(parent_new));
}

}  // namespace detail

rooted_ordered_tree from_parentheses(std::string_view text) {
    detail::linked_forest f;
    std::vector<std::size_t> open;      // stack of unclosed nodes
    std::vector<std::size_t> open_pos;  // position of each one's '('
    std::size_t root = npos;
    bool root_closed = false;

    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '(') {
            if (root_closed)
                throw parse_error(parse_error::kind::trailing_garbage, i,
                                  "TrailingGarbage at position " + std::to_string(i));
            std::size_t node = f.add_node();
            if (open.empty()) {
                root = node;
            } else {
                f.append_child(open.back(), node);
            }
            open.push_back(node);
            open_pos.push_back(i);
        } else if (ch == ')') {
            if (open.empty())
                throw parse_error(parse_error::kind::unbalanced_parens, i,
                                  "UnbalancedParens at position " + std::to_string(i));
            open.pop_back();
            open_pos.pop_back();
            if (open.empty()) root_closed = true;
        } else {
            throw parse_error(parse_error::kind::trailing_garbage, i,
                              "TrailingGarbage at position " + std::to_string(i));
        }
    }
    if (!open.empty())
        throw parse_error(parse_error::kind::unbalanced_parens, open_pos.front(),
                          "UnbalancedParens at position " + std::to_string(open_pos.front()));
    if (root == npos)
        throw parse_error(parse_error::kind::empty_input, 0, "EmptyInput");

    return detail::build_bfs_normalized(root, f);
}

std::string to_parentheses(const rooted_ordered_tree& tree) {
    std::string out;
    out.reserve(2 * tree.node_count());
    struct frame {
        std::size_t node;
        std::size_t next;
    };
    std::vector<frame> stack;
    stack.push_back({0, tree.child_begin(0)});
    out.push_back('(');
    while (!stack.empty()) {
        frame& f = stack.back();
        if (f.next < tree.child_end(f.node)) {
            std::size_t c = f.next++;
            out.push_back('(');
            stack.push_back({c, tree.child_begin(c)});
        } else {
            out.push_back(')');
            stack.pop_back();
        }
    }
    return out;
}

rooted_ordered_tree from_edge_list(
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::optional<std::string>& declared_root) {
    if (edges.empty()) {
        if (declared_root) return rooted_ordered_tree{};
        throw parse_error(parse_error::kind::empty_input, 0,
                          "EmptyInput: no edges and no root declaration");
    }

    std::unordered_map<std::string, std::size_t> ids;
    std::vector<const std::string*> labels;  // id -> label, first-mention order
    detail::linked_forest f;
    std::vector<bool> has_parent;

    auto intern = [&](const std::string& label) {
        auto [it, inserted] = ids.try_emplace(label, labels.size());
        if (inserted) {
            labels.push_back(&it->first);
            f.add_node();
            has_parent.push_back(false);
        }
        return it->second;
    };

    for (const auto& [parent_label, child_label] : edges) {
        std::size_t p = intern(parent_label);
        std::size_t c = intern(child_label);
        if (has_parent[c])
            throw parse_error(parse_error::kind::duplicate_child, child_label,
                              "DuplicateChild: \"" + child_label + "\" has two parents");
        has_parent[c] = true;
        f.append_child(p, c);
    }

    const std::size_t n = labels.size();
    std::size_t root = npos;
    for (std::size_t v = 0; v < n; ++v) {
        if (has_parent[v]) continue;
        if (root != npos)
            throw parse_error(parse_error::kind::multiple_roots, *labels[v],
                              "MultipleRoots: \"" + *labels[root] + "\" and \"" + *labels[v] +
                                  "\" both lack a parent");
        root = v;
    }
    if (root == npos)
        throw parse_error(parse_error::kind::cycle_detected, std::string{},
                          "CycleDetected: every node has a parent");
    if (declared_root && *declared_root != *labels[root])
        throw parse_error(parse_error::kind::multiple_roots, *declared_root,
                          "MultipleRoots: declared root \"" + *declared_root +
                              "\" does not match parentless node \"" + *labels[root] + "\"");

    // reachability; a stranded cycle hangs off no root, so it surfaces here
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> queue{root};
    seen[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t c = f.first_child[queue[head]]; c != npos; c = f.next_sibling[c]) {
            seen[c] = true;
            queue.push_back(c);
        }
    }
    if (queue.size() != n) {
        for (std::size_t v = 0; v < n; ++v) {
            if (!seen[v])
                throw parse_error(parse_error::kind::disconnected_node, *labels[v],
                                  "DisconnectedNode: \"" + *labels[v] +
                                      "\" is not reachable from the root");
        }
    }

    return detail::build_bfs_normalized(root, f);
}

rooted_ordered_tree read_edge_list_text(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::optional<std::string> declared_root;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        std::vector<std::string> tokens;
        std::istringstream split{std::string(line)};
        for (std::string tok; split >> tok;) tokens.push_back(std::move(tok));
        if (tokens.empty()) continue;

        if (tokens.size() == 2 && tokens[0] == "root") {
            if (declared_root)
                throw parse_error(parse_error::kind::multiple_roots, tokens[1],
                                  "MultipleRoots: second root declaration on line " +
                                      std::to_string(line_no));
            declared_root = std::move(tokens[1]);
        } else if (tokens.size() == 2) {
            edges.emplace_back(std::move(tokens[0]), std::move(tokens[1]));
        } else {
            throw parse_error(parse_error::kind::trailing_garbage, line_no,
                              "TrailingGarbage: expected \"parent child\" on line " +
                                  std::to_string(line_no));
        }
    }

    return from_edge_list(edges, declared_root);
}

std::string write_edge_list_text(const rooted_ordered_tree& tree) {
    if (tree.node_count() == 1) return "root 0\n";
    std::string out;
    for (std::size_t v = 1; v < tree.node_count(); ++v) {
        out += std::to_string(tree.parent(v));
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

namespace {

// uniform in [0, bound); rejection keeps the modulo unbiased
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = gen();
        if (r >= threshold) return r % bound;
    }
}

}  // namespace

rooted_ordered_tree random_ordered_tree(std::size_t n, std::uint64_t seed) {
    if (n == 0)
        throw op_error(op_error::kind::invalid_size, "InvalidSize: node count must be positive");
    if (n == 1) return rooted_ordered_tree{};

    // n up-steps and n-1 down-steps, uniformly shuffled; total sum +1 means
    // exactly one rotation keeps every prefix positive (cycle lemma), and
    // dropping its first step leaves a uniform Dyck word of semilength n-1
    std::vector<signed char> steps(2 * n - 1, -1);
    for (std::size_t i = 0; i < n; ++i) steps[i] = 1;

    std::mt19937_64 gen(seed);
    for (std::size_t i = steps.size() - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(gen, i + 1));
        std::swap(steps[i], steps[j]);
    }

    long long sum = 0, min_sum = 2;
    std::size_t argmin = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        sum += steps[i];
        if (sum <= min_sum) {  // last minimum wins
            min_sum = sum;
            argmin = i;
        }
    }
    const std::size_t start = (argmin + 1) % steps.size();

    // read the rotated word, skipping its leading up-step; build the root's
    // forest with '(' = enter new child, ')' = return to parent
    detail::linked_forest f;
    std::size_t root = f.add_node();
    std::size_t current = root;
    std::vector<std::size_t> path;
    for (std::size_t k = 1; k < steps.size(); ++k) {
        signed char step = steps[(start + k) % steps.size()];
        if (step == 1) {
            std::size_t node = f.add_node();
            f.append_child(current, node);
            path.push_back(current);
            current = node;
        } else {
            current = path.back();
            path.pop_back();
        }
    }

    return detail::build_bfs_normalized(root, f);
}

std::size_t tree_depth(const rooted_ordered_tree& tree) {
    const std::size_t n = tree.node_count();
    std::vector<std::size_t> depth(n, 0);
    std::size_t best = 0;
    for (std::size_t v = 1; v < n; ++v) {
        depth[v] = depth[tree.parent(v)] + 1;  // parent(v) < v, already filled
        if (depth[v] > best) best = depth[v];
    }
    return best;
}

std::size_t leaf_count(const rooted_ordered_tree& tree) {
    std::size_t leaves = 0;
    for (std::size_t v = 0; v < tree.node_count(); ++v)
        if (!tree.has_children(v)) ++leaves;
    return leaves;
}

}  // namespace strtree
