#include "strtree/packed.hpp"

namespace strtree {

packed_tree packed_tree::pack(const tree_string& s) {
    const std::string& text = s.text();
    const std::size_t n = text.size();
    std::vector<std::uint8_t> payload(n / 4 + (n % 4 != 0 ? 1 : 0), 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto code = static_cast<std::uint8_t>(letter_code(text[i]));
        payload[i / 4] |= static_cast<std::uint8_t>(code << (2 * (i % 4)));
    }
    return packed_tree(s.traversal_kind(), n, std::move(payload));
}

packed_tree packed_tree::from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < header_size)
        throw packed_format_error(packed_format_error::kind::length_mismatch,
                                  "LengthMismatch: " + std::to_string(bytes.size()) +
                                      " bytes is shorter than the 14-byte header");
    if (bytes[0] != 'S' || bytes[1] != 'T' || bytes[2] != 'R' || bytes[3] != 'T')
        throw packed_format_error(packed_format_error::kind::bad_magic,
                                  "BadMagic: expected \"STRT\"");
    if (bytes[4] != format_version)
        throw packed_format_error(packed_format_error::kind::unsupported_version,
                                  "UnsupportedVersion: " + std::to_string(bytes[4]));
    if (bytes[5] > 1)
        throw packed_format_error(packed_format_error::kind::bad_traversal,
                                  "BadTraversal: tag " + std::to_string(bytes[5]));
    traversal t = bytes[5] == 0 ? traversal::bfs : traversal::dfs;

    std::uint64_t n = 0;
    for (std::size_t i = 0; i < 8; ++i) n |= static_cast<std::uint64_t>(bytes[6 + i]) << (8 * i);

    // ceil(2n/8) = ceil(n/4), computed without overflowing 2n
    const std::uint64_t expected = n / 4 + (n % 4 != 0 ? 1 : 0);
    if (bytes.size() - header_size != expected)
        throw packed_format_error(
            packed_format_error::kind::length_mismatch,
            "LengthMismatch: node count " + std::to_string(n) + " needs " +
                std::to_string(expected) + " payload bytes, found " +
                std::to_string(bytes.size() - header_size));

    std::vector<std::uint8_t> payload(bytes.begin() + header_size, bytes.end());
    if (n % 4 != 0 && !payload.empty()) {
        std::uint8_t pad = static_cast<std::uint8_t>(payload.back() >> (2 * (n % 4)));
        if (pad != 0)
            throw packed_format_error(packed_format_error::kind::bad_padding,
                                      "BadPadding: pad bits after the last letter must be zero");
    }
    return packed_tree(t, n, std::move(payload));
}

tree_string packed_tree::unpack() const {
    std::string text(static_cast<std::size_t>(node_count_), '\0');
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto code = static_cast<std::uint8_t>((payload_[i / 4] >> (2 * (i % 4))) & 0b11u);
        text[i] = letter_char(static_cast<node_letter>(code));
    }
    return tree_string::parse(std::move(text), traversal_);
}

std::vector<std::uint8_t> packed_tree::to_bytes() const {
    std::vector<std::uint8_t> out;
    out.reserve(header_size + payload_.size());
    out.push_back('S');
    out.push_back('T');
    out.push_back('R');
    out.push_back('T');
    out.push_back(format_version);
    out.push_back(traversal_ == traversal::bfs ? 0 : 1);
    for (std::size_t i = 0; i < 8; ++i)
        out.push_back(static_cast<std::uint8_t>((node_count_ >> (8 * i)) & 0xffu));
    out.insert(out.end(), payload_.begin(), payload_.end());
    return out;
}

}  // namespace strtree
