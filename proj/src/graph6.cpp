#include "domlab/graph6.hpp"

#include "domlab/error.hpp"

namespace domlab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

std::size_t edge_bytes(int order) {
    const std::size_t pairs = static_cast<std::size_t>(order) * static_cast<std::size_t>(order - 1) / 2;
    return (pairs + 5) / 6;
}

bool printable(char c) { return c >= 63 && c <= 126; }

} // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kHeader))
        base = kHeader.size();
    if (text.size() <= base)
        throw ParseError("graph6: missing order byte", base);

    const char head = text[base];
    if (!printable(head))
        throw ParseError("graph6: malformed order byte", base);
    if (head == 126)
        throw ParseError("graph6: long-form order (>= 63) not supported", base);
    const int order = head - kBias;

    const std::size_t need = edge_bytes(order);
    const std::size_t body = base + 1;
    const std::size_t have = text.size() - body;
    if (have < need)
        throw ParseError("graph6: truncated edge data", text.size());
    if (have > need)
        throw ParseError("graph6: trailing bytes after edge data", body + need);

    GraphBuilder b(order);
    int i = 0;
    int j = 1;
    const std::size_t pairs = static_cast<std::size_t>(order) * static_cast<std::size_t>(order - 1) / 2;
    std::size_t consumed = 0;
    for (std::size_t k = 0; k < need; ++k) {
        const char c = text[body + k];
        if (!printable(c))
            throw ParseError("graph6: byte outside the printable range 63..126", body + k);
        const int six = c - kBias;
        for (int shift = 5; shift >= 0; --shift, ++consumed) {
            const bool set = ((six >> shift) & 1) != 0;
            if (consumed >= pairs) {
                if (set)
                    throw ParseError("graph6: non-zero padding bits", body + k);
                continue;
            }
            if (set)
                b.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return b.build();
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxOrder)
        throw RangeError("graph6 short form supports order <= 62");
    std::string out;
    out.reserve(1 + edge_bytes(n));
    out.push_back(static_cast<char>(kBias + n));
    int six = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            six = (six << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kBias + six));
                six = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>(kBias + (six << (6 - filled))));
    return out;
}

} // namespace domlab
