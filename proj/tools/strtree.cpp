// strtree — command line front end for the string-tree library.
//
// One verb per library operation; "-" means stdin/stdout. Text outputs are
// newline-terminated; pack/unpack move raw bytes. Exit codes: 0 success,
// 1 invalid input data, 2 usage errors (bad flags, unreadable files).
#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strtree/codec.hpp"
#include "strtree/packed.hpp"
#include "strtree/strops.hpp"
#include "strtree/tree.hpp"

using namespace strtree;

namespace {

struct usage_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void report_error(const std::string& message) {
    bool color = ::isatty(::fileno(stderr)) != 0 && std::getenv("NO_COLOR") == nullptr;
    if (color)
        std::cerr << "\x1b[31merror:\x1b[0m " << message << "\n";
    else
        std::cerr << "error: " << message << "\n";
}

std::string read_all(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw usage_failure("cannot open " + path);
        buf << file.rdbuf();
    }
    return buf.str();
}

void write_all(const std::string& path, std::string_view data) {
    if (path == "-") {
        std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw usage_failure("cannot open " + path);
    file.write(data.data(), static_cast<std::streamsize>(data.size()));
}

std::string trimmed(const std::string& raw) {
    const char* ws = " \t\r\n";
    std::size_t first = raw.find_first_not_of(ws);
    if (first == std::string::npos) return "";
    std::size_t last = raw.find_last_not_of(ws);
    return raw.substr(first, last - first + 1);
}

traversal to_traversal(const std::string& name) {
    return name == "dfs" ? traversal::dfs : traversal::bfs;
}

tree_string read_string_input(const std::string& path, traversal tag) {
    return tree_string::parse(trimmed(read_all(path)), tag);
}

rooted_ordered_tree read_tree(const std::string& path, const std::string& format,
                              traversal tag) {
    std::string raw = read_all(path);
    if (format == "paren") return from_parentheses(raw);
    if (format == "edges") return read_edge_list_text(raw);
    if (format == "string") return decode(tree_string::parse(trimmed(raw), tag));
    std::span<const std::uint8_t> bytes{reinterpret_cast<const std::uint8_t*>(raw.data()),
                                        raw.size()};
    return decode(packed_tree::from_bytes(bytes).unpack());
}

std::string render_tree(const rooted_ordered_tree& tree, const std::string& format,
                        traversal tag) {
    if (format == "paren") return to_parentheses(tree) + "\n";
    if (format == "edges") return write_edge_list_text(tree);
    if (format == "string") return encode(tree, tag).text() + "\n";
    std::vector<std::uint8_t> bytes = packed_tree::pack(encode(tree, tag)).to_bytes();
    return std::string(bytes.begin(), bytes.end());
}

struct options {
    std::string in_path = "-";
    std::string out_path = "-";
    std::string in_format;
    std::string out_format;
    std::string traversal_name;
    std::string rule_text;
    std::string needle_text;
    std::string scion_text;
    std::string dist_a, dist_b;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t position = 0;
    std::size_t max_n = 0;
    bool global_mode = false;
};

const std::vector<std::string> kTreeFormats = {"paren", "edges", "string", "packed"};

CLI::App* add_command(CLI::App& app, const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    return sub;
}

void add_input(CLI::App* sub, options& opt) {
    sub->add_option("-i,--in", opt.in_path, "input file, - for stdin");
}

void add_output(CLI::App* sub, options& opt) {
    sub->add_option("-o,--out", opt.out_path, "output file, - for stdout");
}

void add_in_format(CLI::App* sub, options& opt) {
    sub->add_option("--in-format", opt.in_format, "input representation")
        ->check(CLI::IsMember(kTreeFormats));
}

void add_out_format(CLI::App* sub, options& opt) {
    sub->add_option("--out-format", opt.out_format, "output representation")
        ->check(CLI::IsMember(kTreeFormats));
}

void add_traversal(CLI::App* sub, options& opt) {
    sub->add_option("--traversal", opt.traversal_name, "string traversal order")
        ->check(CLI::IsMember(std::vector<std::string>{"bfs", "dfs"}));
}

int run(CLI::App& app, options& opt) {
    CLI::App* sub = app.get_subcommands().at(0);
    const std::string& cmd = sub->get_name();

    // per-command defaults for whatever the user left unset
    if (opt.traversal_name.empty())
        opt.traversal_name = (cmd == "search" || cmd == "graft") ? "dfs" : "bfs";
    if (opt.in_format.empty()) opt.in_format = cmd == "encode" ? "paren" : "string";
    if (opt.out_format.empty()) opt.out_format = cmd == "decode" ? "paren" : "string";
    traversal tag = to_traversal(opt.traversal_name);

    if ((cmd == "search" || cmd == "graft") && tag != traversal::dfs)
        throw usage_failure(cmd + " works on subtree-contiguous strings; use --traversal dfs");

    if (cmd == "encode" || cmd == "decode") {
        rooted_ordered_tree tree = read_tree(opt.in_path, opt.in_format, tag);
        write_all(opt.out_path, render_tree(tree, opt.out_format, tag));
        return 0;
    }
    if (cmd == "validate") {
        validation_report report = validate(trimmed(read_all(opt.in_path)), tag);
        if (!report.valid) {
            std::cerr << describe(report) << "\n";
            return 1;
        }
        write_all(opt.out_path, "ok\n");
        return 0;
    }
    if (cmd == "canon") {
        tree_string s = read_string_input(opt.in_path, tag);
        write_all(opt.out_path, canonicalize(s).text() + "\n");
        return 0;
    }
    if (cmd == "dist") {
        tree_string a = read_string_input(opt.dist_a, tag);
        tree_string b = read_string_input(opt.dist_b, tag);
        write_all(opt.out_path, std::to_string(edit_distance(a, b)) + "\n");
        return 0;
    }
    if (cmd == "rewrite") {
        sed_command command = [&] {
            try {
                return parse_sed(opt.rule_text);
            } catch (const std::invalid_argument& e) {
                throw usage_failure(std::string("bad --rule: ") + e.what());
            }
        }();
        if (opt.global_mode) command.mode = rewrite_mode::global;
        tree_string s = read_string_input(opt.in_path, tag);
        tree_string result = rewrite(s, command.rule, command.mode);
        write_all(opt.out_path, result.text() + "\n");
        return 0;
    }
    if (cmd == "search") {
        tree_string hay = read_string_input(opt.in_path, tag);
        tree_string needle = tree_string::parse(opt.needle_text, tag);
        std::string lines;
        for (std::size_t p : find_subtrees(hay, needle)) lines += std::to_string(p) + "\n";
        write_all(opt.out_path, lines);
        return 0;
    }
    if (cmd == "graft") {
        tree_string host = read_string_input(opt.in_path, tag);
        tree_string scion = tree_string::parse(opt.scion_text, tag);
        write_all(opt.out_path, graft(host, opt.position, scion).text() + "\n");
        return 0;
    }
    if (cmd == "pack") {
        tree_string s = opt.in_format == "string"
                            ? read_string_input(opt.in_path, tag)
                            : encode(read_tree(opt.in_path, opt.in_format, tag), tag);
        std::vector<std::uint8_t> bytes = packed_tree::pack(s).to_bytes();
        write_all(opt.out_path, std::string(bytes.begin(), bytes.end()));
        return 0;
    }
    if (cmd == "unpack") {
        std::string raw = read_all(opt.in_path);
        std::span<const std::uint8_t> bytes{
            reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()};
        tree_string s = packed_tree::from_bytes(bytes).unpack();
        if (opt.out_format == "string") {
            write_all(opt.out_path, s.text() + "\n");
        } else {
            write_all(opt.out_path,
                      render_tree(decode(s), opt.out_format, s.traversal_kind()));
        }
        return 0;
    }
    if (cmd == "gen") {
        rooted_ordered_tree tree = random_ordered_tree(opt.n, opt.seed);
        write_all(opt.out_path, render_tree(tree, opt.out_format, tag));
        return 0;
    }
    if (cmd == "enum") {
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (opt.out_path != "-") {
            file.open(opt.out_path, std::ios::binary);
            if (!file) throw usage_failure("cannot open " + opt.out_path);
            out = &file;
        }
        std::size_t guard = opt.max_n != 0 ? opt.max_n : 20;
        enumerate_valid(opt.n, tag, [&](std::string_view s) { *out << s << "\n"; }, guard);
        out->flush();
        return 0;
    }
    if (cmd == "count-canon") {
        std::size_t guard = opt.max_n != 0 ? opt.max_n : 16;
        write_all(opt.out_path, std::to_string(count_canonical(opt.n, guard)) + "\n");
        return 0;
    }
    if (cmd == "stats") {
        rooted_ordered_tree tree = read_tree(opt.in_path, opt.in_format, tag);
        std::string line = "nodes=" + std::to_string(tree.node_count()) +
                           " depth=" + std::to_string(tree_depth(tree)) +
                           " leaves=" + std::to_string(leaf_count(tree)) + "\n";
        write_all(opt.out_path, line);
        return 0;
    }
    throw usage_failure("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"string encodings of rooted ordered trees"};
    app.require_subcommand(1);
    options opt;

    CLI::App* encode_cmd = add_command(app, "encode", "tree input -> traversal string");
    add_input(encode_cmd, opt);
    add_output(encode_cmd, opt);
    add_in_format(encode_cmd, opt);
    add_out_format(encode_cmd, opt);
    add_traversal(encode_cmd, opt);

    CLI::App* decode_cmd = add_command(app, "decode", "traversal string -> tree output");
    add_input(decode_cmd, opt);
    add_output(decode_cmd, opt);
    add_in_format(decode_cmd, opt);
    add_out_format(decode_cmd, opt);
    add_traversal(decode_cmd, opt);

    CLI::App* validate_cmd = add_command(app, "validate", "check a string, report the defect");
    add_input(validate_cmd, opt);
    add_output(validate_cmd, opt);
    add_traversal(validate_cmd, opt);

    CLI::App* canon_cmd = add_command(app, "canon", "canonical form (shape only)");
    add_input(canon_cmd, opt);
    add_output(canon_cmd, opt);
    add_traversal(canon_cmd, opt);

    CLI::App* dist_cmd = add_command(app, "dist", "edit distance between two string files");
    dist_cmd->add_option("first", opt.dist_a, "first string file")->required();
    dist_cmd->add_option("second", opt.dist_b, "second string file")->required();
    add_output(dist_cmd, opt);
    add_traversal(dist_cmd, opt);

    CLI::App* rewrite_cmd = add_command(app, "rewrite", "apply a s/pat/rep/ rule");
    add_input(rewrite_cmd, opt);
    add_output(rewrite_cmd, opt);
    add_traversal(rewrite_cmd, opt);
    rewrite_cmd->add_option("--rule", opt.rule_text, "sed-style substitution")->required();
    rewrite_cmd->add_flag("--global", opt.global_mode, "replace every match");

    CLI::App* search_cmd = add_command(app, "search", "positions of a subtree pattern");
    add_input(search_cmd, opt);
    add_output(search_cmd, opt);
    add_traversal(search_cmd, opt);
    search_cmd->add_option("--needle", opt.needle_text, "pattern string")->required();

    CLI::App* graft_cmd = add_command(app, "graft", "replace a leaf with a subtree");
    add_input(graft_cmd, opt);
    add_output(graft_cmd, opt);
    add_traversal(graft_cmd, opt);
    graft_cmd->add_option("--position", opt.position, "leaf position in the host")
        ->required();
    graft_cmd->add_option("--scion", opt.scion_text, "subtree string to splice in")
        ->required();

    CLI::App* pack_cmd = add_command(app, "pack", "write the 2-bit binary form");
    add_input(pack_cmd, opt);
    add_output(pack_cmd, opt);
    add_in_format(pack_cmd, opt);
    add_traversal(pack_cmd, opt);

    CLI::App* unpack_cmd = add_command(app, "unpack", "read the 2-bit binary form");
    add_input(unpack_cmd, opt);
    add_output(unpack_cmd, opt);
    add_out_format(unpack_cmd, opt);

    CLI::App* gen_cmd = add_command(app, "gen", "uniform random tree");
    add_output(gen_cmd, opt);
    add_out_format(gen_cmd, opt);
    add_traversal(gen_cmd, opt);
    gen_cmd->add_option("-n", opt.n, "node count")->required();
    gen_cmd->add_option("--seed", opt.seed, "generator seed");

    CLI::App* enum_cmd = add_command(app, "enum", "all valid strings of length n");
    add_output(enum_cmd, opt);
    add_traversal(enum_cmd, opt);
    enum_cmd->add_option("-n", opt.n, "string length")->required();
    enum_cmd->add_option("--max-n", opt.max_n, "enumeration guard");

    CLI::App* count_cmd = add_command(app, "count-canon", "count canonical forms of size n");
    add_output(count_cmd, opt);
    count_cmd->add_option("-n", opt.n, "node count")->required();
    count_cmd->add_option("--max-n", opt.max_n, "size guard");

    CLI::App* stats_cmd = add_command(app, "stats", "node, depth and leaf counts");
    add_input(stats_cmd, opt);
    add_in_format(stats_cmd, opt);
    add_traversal(stats_cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run(app, opt);
    } catch (const usage_failure& e) {
        report_error(e.what());
        return 2;
    } catch (const invalid_result_error& e) {
        report_error(std::string(e.what()) + " — result \"" + e.result_text() + "\"");
        return 1;
    } catch (const std::invalid_argument& e) {
        report_error(e.what());
        return 2;
    } catch (const std::exception& e) {
        report_error(e.what());
        return 1;
    }
}
