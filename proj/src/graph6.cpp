#include "critg/graph6.hpp"

namespace critg {

namespace {

constexpr int kBias = 63;       // printable range is 63..126
constexpr int kBig = 126;       // '~' escapes to a wider size field

struct BitReader {
    std::string_view data;
    std::size_t pos;   // byte position in the original line (for errors)
    int bit = 0;       // next bit within the current byte, MSB first

    int take(std::size_t base) {
        if (pos >= data.size())
            throw Graph6Error("graph6: truncated edge bits", base + pos);
        unsigned char c = static_cast<unsigned char>(data[pos]);
        if (c < kBias || c > kBig)
            throw Graph6Error("graph6: byte out of range", base + pos);
        int v = (c - kBias) >> (5 - bit) & 1;
        if (++bit == 6) {
            bit = 0;
            ++pos;
        }
        return v;
    }
};

}  // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t base = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) {
        line.remove_prefix(header.size());
        base = header.size();
    }
    if (line.empty()) throw Graph6Error("graph6: empty input", base);

    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (line.size() < pos + k)
            throw Graph6Error("graph6: truncated size field", base + line.size());
    };
    auto sixbits = [&]() {
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < kBias || c > kBig)
            throw Graph6Error("graph6: byte out of range", base + pos);
        ++pos;
        return static_cast<long long>(c - kBias);
    };

    long long n;
    if (static_cast<unsigned char>(line[0]) != kBig) {
        need(1);
        n = sixbits();
        if (n > 62) throw Graph6Error("graph6: invalid size byte", base);
    } else if (line.size() >= 2 && static_cast<unsigned char>(line[1]) != kBig) {
        ++pos;
        need(3);
        n = (sixbits() << 12) | (sixbits() << 6) | sixbits();
        if (n < 63) throw Graph6Error("graph6: non-canonical size field", base);
    } else {
        pos += 2;
        need(6);
        n = 0;
        for (int i = 0; i < 6; ++i) n = (n << 6) | sixbits();
        if (n < 258048) throw Graph6Error("graph6: non-canonical size field", base);
    }
    if (n > 100000) throw Graph6Error("graph6: size too large for this tool", base);

    GraphBuilder b(static_cast<int>(n));
    BitReader bits{line, pos};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits.take(base)) b.add_edge(i, j);
    // padding bits of the last byte must be zero
    while (bits.bit != 0)
        if (bits.take(base))
            throw Graph6Error("graph6: nonzero padding", base + bits.pos);
    if (bits.pos != line.size())
        throw Graph6Error("graph6: trailing bytes", base + bits.pos);
    return b.build();
}

std::string emit_graph6(const Graph& g) {
    int n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kBig));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        throw std::invalid_argument("emit_graph6: graph too large");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

}  // namespace critg
