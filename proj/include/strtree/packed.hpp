#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "strtree/codec.hpp"

namespace strtree {

class packed_format_error : public std::runtime_error {
public:
    enum class kind { bad_magic, unsupported_version, bad_traversal, length_mismatch, bad_padding };

    packed_format_error(kind k, const std::string& message)
        : std::runtime_error(message), kind_(k) {}

    kind error_kind() const noexcept { return kind_; }

private:
    kind kind_;
};

inline const char* kind_name(packed_format_error::kind k) {
    switch (k) {
        case packed_format_error::kind::bad_magic: return "BadMagic";
        case packed_format_error::kind::unsupported_version: return "UnsupportedVersion";
        case packed_format_error::kind::bad_traversal: return "BadTraversal";
        case packed_format_error::kind::length_mismatch: return "LengthMismatch";
        case packed_format_error::kind::bad_padding: return "BadPadding";
    }
    return "PackedFormatError";
}

// Two bits per node behind a 14-byte header. Wire layout (to_bytes):
//   bytes 0-3   magic "STRT"
//   byte  4     version, currently 1
//   byte  5     traversal tag: 0 = BFS, 1 = DFS
//   bytes 6-13  node count, 64-bit little-endian unsigned
//   bytes 14-   payload, ceil(2n/8) bytes; letter i sits at bits 2i..2i+1
//               taken LSB-first within each byte; pad bits are zero
class packed_tree {
public:
    static constexpr std::uint8_t format_version = 1;
    static constexpr std::size_t header_size = 14;

    static packed_tree pack(const tree_string& s);

    // header/shape validation; throws packed_format_error
    static packed_tree from_bytes(std::span<const std::uint8_t> bytes);

    // throws invalid_string_error when the payload letters fail validation
    // for the header's traversal tag
    tree_string unpack() const;

    std::vector<std::uint8_t> to_bytes() const;

    traversal traversal_kind() const noexcept { return traversal_; }
    std::uint64_t node_count() const noexcept { return node_count_; }
    const std::vector<std::uint8_t>& payload() const noexcept { return payload_; }

    bool operator==(const packed_tree&) const = default;

private:
    packed_tree(traversal t, std::uint64_t n, std::vector<std::uint8_t> payload)
        : traversal_(t), node_count_(n), payload_(std::move(payload)) {}

    traversal traversal_;
    std::uint64_t node_count_;
    std::vector<std::uint8_t> payload_;
};

}  // namespace strtree
