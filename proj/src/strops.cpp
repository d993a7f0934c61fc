#include "strtree/strops.hpp"

#include <algorithm>
#include <regex>

namespace strtree {

std::size_t edit_distance(const tree_string& a, const tree_string& b) {
    if (a.traversal_kind() != b.traversal_kind())
        throw op_error(op_error::kind::traversal_mismatch,
                       "TraversalMismatch: edit_distance needs matching traversal tags");
    std::string_view s = a.text();
    std::string_view t = b.text();
    if (s.size() < t.size()) std::swap(s, t);  // t indexes the row

    std::vector<std::size_t> row(t.size() + 1);
    for (std::size_t j = 0; j <= t.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= t.size(); ++j) {
            std::size_t sub = diag + (s[i - 1] == t[j - 1] ? 0 : 1);
            diag = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
        }
    }
    return row[t.size()];
}

sed_command parse_sed(std::string_view text) {
    if (text.size() < 4 || text[0] != 's' || text[1] != '/')
        throw std::invalid_argument("rewrite rule must look like s/PATTERN/REPLACEMENT/[g]");

    std::string parts[2];
    std::string current;
    int part = 0;
    std::size_t i = 2;
    for (; i < text.size() && part < 2; ++i) {
        char c = text[i];
        if (c == '\\' && i + 1 < text.size()) {
            if (text[i + 1] == '/')
                current += '/';
            else {
                current += '\\';
                current += text[i + 1];
            }
            ++i;
        } else if (c == '/') {
            parts[part++] = std::move(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (part < 2) throw std::invalid_argument("rewrite rule is missing a '/' delimiter");

    std::string_view flags = text.substr(i);
    rewrite_mode mode = rewrite_mode::first;
    if (flags == "g")
        mode = rewrite_mode::global;
    else if (!flags.empty())
        throw std::invalid_argument("unknown rewrite flag \"" + std::string(flags) + "\"");

    // replacement: sed's \N becomes $N, and a literal $ must be doubled
    std::string replacement;
    const std::string& raw = parts[1];
    for (std::size_t k = 0; k < raw.size(); ++k) {
        char c = raw[k];
        if (c == '\\' && k + 1 < raw.size()) {
            char next = raw[++k];
            if (next >= '0' && next <= '9') {
                replacement += '$';
                replacement += next;
            } else {
                replacement += next;
            }
        } else if (c == '$') {
            replacement += "$$";
        } else {
            replacement += c;
        }
    }

    return {rewrite_rule{std::move(parts[0]), std::move(replacement)}, mode};
}

tree_string rewrite(const tree_string& s, const rewrite_rule& rule, rewrite_mode mode) {
    std::regex re(rule.pattern);  // ECMAScript; std::regex_error propagates
    auto flags = mode == rewrite_mode::first ? std::regex_constants::format_first_only
                                             : std::regex_constants::format_default;
    std::string result = std::regex_replace(s.text(), re, rule.replacement, flags);
    validation_report report = validate(result, s.traversal_kind());
    if (!report.valid) throw invalid_result_error(report, std::move(result));
    return tree_string::parse(std::move(result), s.traversal_kind());
}

namespace {

void require_dfs(const tree_string& s, const char* op) {
    if (s.traversal_kind() != traversal::dfs)
        throw op_error(op_error::kind::traversal_mismatch,
                       std::string("TraversalMismatch: ") + op + " needs DFS strings");
}

// length of the contiguous subtree substring rooted at position; the root
// letter's is-last flag is context, not part of the subtree
std::size_t subtree_span(std::string_view text, std::size_t position) {
    std::size_t open = letter_has_children(text[position]) ? 1 : 0;
    std::size_t end = position + 1;
    while (open > 0) {  // validity bounds the scan
        char c = text[end++];
        if (letter_is_last(c)) --open;
        if (letter_has_children(c)) ++open;
    }
    return end - position;
}

}  // namespace

std::vector<std::size_t> find_subtrees(const tree_string& haystack, const tree_string& needle) {
    require_dfs(haystack, "find_subtrees");
    require_dfs(needle, "find_subtrees");
    std::string_view hay = haystack.text();
    std::string_view pat = needle.text();
    std::vector<std::size_t> positions;

    if (pat.size() == 1) {  // every node roots some subtree
        positions.resize(hay.size());
        for (std::size_t i = 0; i < hay.size(); ++i) positions[i] = i;
        return positions;
    }

    const bool root_kids = letter_has_children(pat[0]);
    std::string_view tail = pat.substr(1);
    for (std::size_t i = 0; i + pat.size() <= hay.size(); ++i) {
        if (letter_has_children(hay[i]) == root_kids && hay.substr(i + 1, tail.size()) == tail)
            positions.push_back(i);
    }
    return positions;
}

tree_string extract_subtree(const tree_string& s, std::size_t position) {
    require_dfs(s, "extract_subtree");
    if (position >= s.node_count())
        throw op_error(op_error::kind::index_out_of_range,
                       "IndexOutOfRange: position " + std::to_string(position) + " in " +
                           std::to_string(s.node_count()) + " nodes",
                       position);
    std::string_view text = s.text();
    std::size_t span = subtree_span(text, position);
    std::string out(text.substr(position, span));
    out[0] = 'Y';  // standalone root convention
    return tree_string::parse(std::move(out), traversal::dfs);
}

tree_string graft(const tree_string& host, std::size_t position, const tree_string& scion) {
    require_dfs(host, "graft");
    require_dfs(scion, "graft");
    std::string_view text = host.text();
    if (position >= text.size())
        throw op_error(op_error::kind::index_out_of_range,
                       "IndexOutOfRange: position " + std::to_string(position) + " in " +
                           std::to_string(text.size()) + " nodes",
                       position);
    if (text.size() == 1) return scion;  // position 0 replaces the whole tree
    if (letter_has_children(text[position]))
        throw op_error(op_error::kind::not_a_leaf,
                       "NotALeaf: position " + std::to_string(position) + " has children",
                       position);

    std::string out;
    out.reserve(text.size() - 1 + scion.node_count());
    out += text.substr(0, position);
    out += make_letter(scion.node_count() > 1, letter_is_last(text[position]));
    out += scion.text().substr(1);
    out += text.substr(position + 1);
    return tree_string::parse(std::move(out), traversal::dfs);
}

tree_string canonicalize(const tree_string& s) {
    rooted_ordered_tree tree = decode(s);
    const std::size_t n = tree.node_count();

    // AHU shape codes, children sorted ascending; order[] rearranges each
    // child range in place. Bottom-up works index-wise: children of v are
    // all > v.
    std::vector<std::string> code(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t v = n; v-- > 0;) {
        auto begin = order.begin() + static_cast<std::ptrdiff_t>(tree.child_begin(v));
        auto end = order.begin() + static_cast<std::ptrdiff_t>(tree.child_end(v));
        std::stable_sort(begin, end,
                         [&](std::size_t a, std::size_t b) { return code[a] < code[b]; });
        std::string& c = code[v];
        c = "(";
        for (auto it = begin; it != end; ++it) c += code[*it];
        c += ')';
    }

    // preorder emit with the sorted sibling order
    std::string text(n, 'Y');
    struct item {
        std::size_t v;
        bool last;
    };
    std::vector<item> stack{{0, true}};
    std::size_t k = 0;
    while (!stack.empty()) {
        auto [v, last] = stack.back();
        stack.pop_back();
        if (k > 0) text[k] = make_letter(tree.has_children(v), last);
        ++k;
        for (std::size_t j = tree.child_end(v); j > tree.child_begin(v); --j)
            stack.push_back({order[j - 1], j == tree.child_end(v)});
    }
    return tree_string::parse(std::move(text), traversal::dfs);
}

namespace {

void enumerate_impl(std::size_t n, const std::function<void(std::string_view)>& visit,
                    std::size_t guard) {
    if (n == 0)
        throw op_error(op_error::kind::invalid_size, "InvalidSize: length must be positive");
    if (n > guard)
        throw op_error(op_error::kind::too_large, "TooLarge: length " + std::to_string(n) +
                                                      " exceeds the enumeration guard " +
                                                      std::to_string(guard));
    std::string buf(n, 'Y');
    if (n == 1) {
        visit(buf);
        return;
    }

    // backtracking over positions 1..n-1 in the rank order x < y < X < Y;
    // pending[i] = unclosed ancestors before placing position i, and a
    // partial string survives iff pending fits in the remaining letters and
    // hits zero exactly at the end
    static constexpr char by_rank[4] = {'x', 'y', 'X', 'Y'};
    std::vector<int> choice(n, -1);
    std::vector<std::size_t> pending(n + 1, 0);
    pending[1] = 1;
    std::size_t i = 1;
    for (;;) {
        int c = ++choice[i];
        if (c == 4) {
            choice[i] = -1;
            if (--i == 0) break;
            continue;
        }
        char ch = by_rank[c];
        std::size_t next = pending[i] + (letter_has_children(ch) ? 1 : 0) -
                           (letter_is_last(ch) ? 1 : 0);
        std::size_t rest = n - 1 - i;
        if (next > rest || (next == 0) != (rest == 0)) continue;
        buf[i] = ch;
        pending[i + 1] = next;
        if (i == n - 1)
            visit(buf);
        else
            ++i;
    }
}

}  // namespace

void enumerate_valid(std::size_t n, traversal /*t*/,
                     const std::function<void(std::string_view)>& visit, std::size_t guard) {
    // BFS and DFS readings accept the same strings (the validators' counters
    // move identically), so the traversal only matters for tagging results
    enumerate_impl(n, visit, guard);
}

std::vector<tree_string> enumerate_valid(std::size_t n, traversal t, std::size_t guard) {
    std::vector<tree_string> out;
    enumerate_impl(
        n, [&](std::string_view text) { out.push_back(tree_string::parse(std::string(text), t)); },
        guard);
    return out;
}

std::uint64_t count_canonical(std::size_t n, std::size_t guard) {
    if (n == 0)
        throw op_error(op_error::kind::invalid_size, "InvalidSize: node count must be positive");
    constexpr std::size_t hard_cap = 40;  // a(41) overflows 64 bits downstream
    if (n > guard || n > hard_cap)
        throw op_error(op_error::kind::too_large, "TooLarge: node count " + std::to_string(n) +
                                                      " exceeds the counting guard " +
                                                      std::to_string(std::min(guard, hard_cap)));

    std::vector<std::uint64_t> a(n + 1, 0);
    a[1] = 1;
    for (std::size_t m = 1; m < n; ++m) {
        std::uint64_t total = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            std::uint64_t divisor_sum = 0;
            for (std::size_t d = 1; d <= k; ++d)
                if (k % d == 0) divisor_sum += d * a[d];
            total += divisor_sum * a[m - k + 1];
        }
        a[m + 1] = total / m;  // the recurrence divides exactly
    }
    return a[n];
}

}  // namespace strtree
