#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "strtree/codec.hpp"
#include "strtree/tree.hpp"

using namespace strtree;

namespace {

rooted_ordered_tree star3() {
    return rooted_ordered_tree::from_bfs_parents({npos, 0, 0});
}

// the 16-node worked example, as reconstructed nesting
const char* const kExampleParen = "(()(())(((()(()())(()()())))()))";
const std::vector<std::size_t> kExampleParents = {npos, 0, 0, 0, 2, 3, 3, 5,
                                                  7,    7, 7, 9, 9, 10, 10, 10};

}  // namespace

TEST_SUITE("tree_model") {

TEST_CASE("from_bfs_parents accepts the invariant and rejects violations") {
    CHECK(rooted_ordered_tree{}.node_count() == 1);
    CHECK(rooted_ordered_tree::from_bfs_parents({npos}).node_count() == 1);

    auto t = rooted_ordered_tree::from_bfs_parents(std::vector<std::size_t>(kExampleParents));
    CHECK(t.node_count() == 16);
    CHECK(t.parent(0) == npos);
    CHECK(t.child_begin(0) == 1);
    CHECK(t.child_end(0) == 4);
    CHECK(t.child_count(10) == 3);
    CHECK(t.is_last_child(3));
    CHECK(!t.is_last_child(1));
    CHECK(!t.is_last_child(0));

    CHECK_THROWS_AS(rooted_ordered_tree::from_bfs_parents({}), std::invalid_argument);
    CHECK_THROWS_AS(rooted_ordered_tree::from_bfs_parents({0}), std::invalid_argument);
    CHECK_THROWS_AS(rooted_ordered_tree::from_bfs_parents({npos, 1}), std::invalid_argument);
    // children of 0 and 1 interleaved: not BFS numbering
    CHECK_THROWS_AS(rooted_ordered_tree::from_bfs_parents({npos, 0, 1, 0}),
                    std::invalid_argument);
}

TEST_CASE("from_parentheses handles the documented shapes") {
    CHECK(from_parentheses("()") == rooted_ordered_tree{});
    CHECK(from_parentheses("(()())") == star3());
    CHECK(from_parentheses(" ( ( ) ( ) ) ") == star3());
    CHECK(from_parentheses(kExampleParen).parents() == kExampleParents);
}

TEST_CASE("from_parentheses rejects malformed text") {
    auto kind_of = [](const char* text) {
        try {
            from_parentheses(text);
        } catch (const parse_error& e) {
            return std::make_pair(e.error_kind(), e.position());
        }
        return std::make_pair(parse_error::kind::empty_input, npos);
    };
    CHECK(kind_of("") == std::make_pair(parse_error::kind::empty_input, std::size_t{0}));
    CHECK(kind_of("   ") == std::make_pair(parse_error::kind::empty_input, std::size_t{0}));
    CHECK(kind_of(")") == std::make_pair(parse_error::kind::unbalanced_parens, std::size_t{0}));
    CHECK(kind_of("(()") == std::make_pair(parse_error::kind::unbalanced_parens, std::size_t{0}));
    CHECK(kind_of("(") == std::make_pair(parse_error::kind::unbalanced_parens, std::size_t{0}));
    CHECK(kind_of("())") == std::make_pair(parse_error::kind::unbalanced_parens, std::size_t{2}));
    CHECK(kind_of("()x") == std::make_pair(parse_error::kind::trailing_garbage, std::size_t{2}));
    CHECK(kind_of("()()") == std::make_pair(parse_error::kind::trailing_garbage, std::size_t{2}));
    CHECK(kind_of("a()") == std::make_pair(parse_error::kind::trailing_garbage, std::size_t{0}));
}

TEST_CASE("to_parentheses inverts from_parentheses on all trees up to 10 nodes") {
    CHECK(to_parentheses(rooted_ordered_tree{}) == "()");
    CHECK(to_parentheses(star3()) == "(()())");
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const auto& paren : oracles::all_trees_paren(n)) {
            rooted_ordered_tree t = from_parentheses(paren);
            CHECK(t.node_count() == n);
            REQUIRE(to_parentheses(t) == paren);
            REQUIRE(from_parentheses(to_parentheses(t)) == t);
            ++total;
        }
    }
    // sum of Catalan(0..9)
    CHECK(total == 6918);
}

TEST_CASE("from_edge_list builds trees and arbitrates malformed input") {
    CHECK(from_edge_list({}, std::string("r")) == rooted_ordered_tree{});
    CHECK_THROWS_AS(from_edge_list({}), parse_error);

    std::vector<std::pair<std::string, std::string>> star{{"a", "b"}, {"a", "c"}};
    CHECK(from_edge_list(star) == star3());

    // sibling order is first-mention order, independent of label names
    std::vector<std::pair<std::string, std::string>> swapped{{"a", "c"}, {"a", "b"}};
    CHECK(from_edge_list(swapped) == star3());

    auto kind_of = [](std::vector<std::pair<std::string, std::string>> edges) {
        try {
            from_edge_list(edges);
        } catch (const parse_error& e) {
            return std::make_pair(e.error_kind(), e.label());
        }
        return std::make_pair(parse_error::kind::empty_input, std::string("<none>"));
    };
    CHECK(kind_of({{"a", "b"}, {"b", "c"}, {"a", "d"}, {"b", "a"}}) ==
          std::make_pair(parse_error::kind::cycle_detected, std::string()));
    CHECK(kind_of({{"a", "b"}, {"c", "b"}}) ==
          std::make_pair(parse_error::kind::duplicate_child, std::string("b")));
    CHECK(kind_of({{"a", "b"}, {"a", "b"}}) ==
          std::make_pair(parse_error::kind::duplicate_child, std::string("b")));
    CHECK(kind_of({{"a", "b"}, {"c", "d"}}) ==
          std::make_pair(parse_error::kind::multiple_roots, std::string("c")));
    // a stranded cycle leaves one real root and unreachable nodes
    CHECK(kind_of({{"a", "b"}, {"c", "d"}, {"d", "c"}}) ==
          std::make_pair(parse_error::kind::disconnected_node, std::string("c")));
    // DuplicateChild wins over the cycle it also creates
    CHECK(kind_of({{"a", "b"}, {"b", "a"}, {"c", "a"}}) ==
          std::make_pair(parse_error::kind::duplicate_child, std::string("a")));
}

TEST_CASE("edge-list text round trips and validates") {
    CHECK(read_edge_list_text("root z\n") == rooted_ordered_tree{});
    CHECK(read_edge_list_text("0 1\n0 2\n") == star3());
    CHECK(read_edge_list_text("  0   1 \n\n0 2\n") == star3());
    CHECK(write_edge_list_text(rooted_ordered_tree{}) == "root 0\n");
    CHECK(write_edge_list_text(star3()) == "0 1\n0 2\n");

    // a root declaration may accompany edges when it names the actual root
    CHECK(read_edge_list_text("root a\na b\n").node_count() == 2);
    CHECK_THROWS_AS(read_edge_list_text("root b\na b\n"), parse_error);
    CHECK_THROWS_AS(read_edge_list_text("root a\nroot a\n"), parse_error);
    CHECK_THROWS_AS(read_edge_list_text("a b c\n"), parse_error);
    CHECK_THROWS_AS(read_edge_list_text(""), parse_error);
    CHECK_THROWS_AS(read_edge_list_text("\n  \n"), parse_error);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        rooted_ordered_tree t = random_ordered_tree(1 + seed % 40, seed);
        CHECK(read_edge_list_text(write_edge_list_text(t)) == t);
    }
}

TEST_CASE("bfs_order is the identity and preorder matches the hand walk") {
    auto one = rooted_ordered_tree{};
    CHECK(bfs_order(one).sequence == std::vector<std::size_t>{0});
    CHECK(preorder(one).sequence == std::vector<std::size_t>{0});
    CHECK(bfs_order(one).kind == order_kind::bfs);
    CHECK(preorder(one).kind == order_kind::preorder);

    CHECK(bfs_order(star3()).sequence == std::vector<std::size_t>{0, 1, 2});
    CHECK(preorder(star3()).sequence == std::vector<std::size_t>{0, 1, 2});

    auto big = from_parentheses(kExampleParen);
    std::vector<std::size_t> identity(16);
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(bfs_order(big).sequence == identity);
    CHECK(preorder(big).sequence ==
          std::vector<std::size_t>{0, 1, 2, 4, 3, 5, 7, 8, 9, 11, 12, 10, 13, 14, 15, 6});
}

TEST_CASE("preorder is a permutation with contiguous subtree blocks") {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const auto& paren : oracles::all_trees_paren(n)) {
            rooted_ordered_tree t = from_parentheses(paren);
            node_order pre = preorder(t);
            std::vector<std::size_t> sorted = pre.sequence;
            std::sort(sorted.begin(), sorted.end());
            std::vector<std::size_t> identity(n);
            std::iota(identity.begin(), identity.end(), 0);
            REQUIRE(sorted == identity);
            REQUIRE(pre.sequence[0] == 0);

            // subtree of v = contiguous run of subtree_size(v) entries
            std::vector<std::size_t> size(n, 1);
            for (std::size_t v = n; v-- > 1;) size[t.parent(v)] += size[v];
            std::vector<std::size_t> pos(n);
            for (std::size_t i = 0; i < n; ++i) pos[pre.sequence[i]] = i;
            for (std::size_t v = 0; v < n; ++v) {
                std::size_t lo = pos[v], hi = pos[v];
                // descendants: exactly the nodes whose root-path passes v
                for (std::size_t w = 0; w < n; ++w) {
                    std::size_t a = w;
                    while (a != npos && a != v) a = t.parent(a);
                    if (a == v) {
                        lo = std::min(lo, pos[w]);
                        hi = std::max(hi, pos[w]);
                    }
                }
                REQUIRE(lo == pos[v]);
                REQUIRE(hi - lo + 1 == size[v]);
            }
        }
    }
}

TEST_CASE("random_ordered_tree is deterministic and size-checked") {
    CHECK(random_ordered_tree(1, 7) == rooted_ordered_tree{});
    CHECK(random_ordered_tree(50, 123) == random_ordered_tree(50, 123));
    CHECK(random_ordered_tree(50, 123).node_count() == 50);
    CHECK_THROWS_AS(random_ordered_tree(0, 1), op_error);
    try {
        random_ordered_tree(0, 1);
    } catch (const op_error& e) {
        CHECK(e.error_kind() == op_error::kind::invalid_size);
    }
}

TEST_CASE("random_ordered_tree is uniform over the five 4-node shapes") {
    std::vector<std::string> shapes = oracles::all_trees_paren(4);
    REQUIRE(shapes.size() == 5);
    std::map<std::string, std::size_t> freq;
    const std::size_t samples = 50000;
    for (std::uint64_t seed = 0; seed < samples; ++seed)
        ++freq[to_parentheses(random_ordered_tree(4, seed))];
    REQUIRE(freq.size() == 5);
    // 0.2 +/- 0.02 of 50 000; chi-square at p = 0.001 (df 4, crit 18.47)
    double chi2 = 0.0;
    for (const auto& [shape, count] : freq) {
        CHECK(count > 9000);
        CHECK(count < 11000);
        double diff = static_cast<double>(count) - 10000.0;
        chi2 += diff * diff / 10000.0;
    }
    CHECK(chi2 < 18.47);

    // every 5-node shape appears as well
    std::set<std::string> seen5;
    for (std::uint64_t seed = 0; seed < 10000; ++seed)
        seen5.insert(to_parentheses(random_ordered_tree(5, seed)));
    CHECK(seen5.size() == oracles::catalan(4));
}

TEST_CASE("tree_depth and leaf_count") {
    CHECK(tree_depth(rooted_ordered_tree{}) == 0);
    CHECK(leaf_count(rooted_ordered_tree{}) == 1);
    CHECK(tree_depth(star3()) == 1);
    CHECK(leaf_count(star3()) == 2);
    auto big = from_parentheses(kExampleParen);
    CHECK(tree_depth(big) == 5);
    CHECK(leaf_count(big) == 9);
}

}  // TEST_SUITE
