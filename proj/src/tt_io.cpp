#include "walshlab/tt_io.hpp"

#include <fstream>
#include <sstream>

namespace walshlab {

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

char hex_digit(int v) { return v < 10 ? char('0' + v) : char('a' + v - 10); }

uint64_t digit_count(int n) { return ((uint64_t{1} << n) + 3) / 4; }

}  // namespace

std::string to_tt_text(const BooleanFunction& f) {
    std::string out = "n=" + std::to_string(f.n()) + "\n";
    const uint64_t digits = digit_count(f.n());
    const uint64_t size = f.size();
    out.reserve(out.size() + digits + 1);
    for (uint64_t d = 0; d < digits; ++d) {
        // leftmost digit carries the highest indices
        const uint64_t base = 4 * (digits - 1 - d);
        int v = 0;
        for (int b = 3; b >= 0; --b) {
            const uint64_t idx = base + uint64_t(b);
            v <<= 1;
            if (idx < size && f.bit(idx)) v |= 1;
        }
        out.push_back(hex_digit(v));
    }
    out.push_back('\n');
    return out;
}

BooleanFunction parse_tt_text(std::string_view text, int cap) {
    // line 1: "n=<k>"
    size_t pos = 0;
    const size_t eol1 = text.find('\n');
    const std::string_view line1 =
        text.substr(0, eol1 == std::string_view::npos ? text.size() : eol1);
    if (line1.substr(0, 2) != "n=") {
        throw ParseError(1, 1, "expected header \"n=<count>\"");
    }
    pos = 2;
    if (pos >= line1.size() || line1[pos] < '0' || line1[pos] > '9') {
        throw ParseError(1, pos + 1, "expected a decimal variable count");
    }
    uint64_t n = 0;
    while (pos < line1.size() && line1[pos] >= '0' && line1[pos] <= '9') {
        n = n * 10 + uint64_t(line1[pos] - '0');
        if (n > 1000) throw ParseError(1, 3, "variable count out of range");
        ++pos;
    }
    if (pos != line1.size()) {
        throw ParseError(1, pos + 1, "unexpected character after variable count");
    }
    if (n < 1) throw ParseError(1, 3, "variable count must be at least 1");
    if (int(n) > cap) {
        throw CapacityError("variable count " + std::to_string(n) +
                            " exceeds the cap of " + std::to_string(cap));
    }
    if (eol1 == std::string_view::npos) {
        throw ParseError(1, line1.size() + 1, "missing truth-table line");
    }

    // line 2: hex digits
    const std::string_view rest = text.substr(eol1 + 1);
    const size_t eol2 = rest.find('\n');
    const std::string_view line2 =
        rest.substr(0, eol2 == std::string_view::npos ? rest.size() : eol2);
    const uint64_t digits = digit_count(int(n));
    for (size_t i = 0; i < line2.size(); ++i) {
        if (hex_value(line2[i]) < 0) {
            throw ParseError(2, i + 1, "invalid hexadecimal digit");
        }
    }
    if (line2.size() != digits) {
        throw ParseError(2, line2.size() + 1,
                         "expected " + std::to_string(digits) +
                             " hexadecimal digits, got " + std::to_string(line2.size()));
    }
    if (eol2 != std::string_view::npos && eol2 + 1 != rest.size()) {
        throw ParseError(3, 1, "unexpected content after the truth table");
    }

    const uint64_t size = uint64_t{1} << n;
    std::vector<uint64_t> words(table_words(int(n)), 0);
    for (uint64_t d = 0; d < digits; ++d) {
        const int v = hex_value(line2[d]);
        const uint64_t base = 4 * (digits - 1 - d);
        for (int b = 0; b < 4; ++b) {
            if (!((v >> b) & 1)) continue;
            const uint64_t idx = base + uint64_t(b);
            if (idx >= size) {
                throw ParseError(2, d + 1, "bit set beyond 2^n table entries");
            }
            words[idx >> 6] |= uint64_t{1} << (idx & 63);
        }
    }
    return BooleanFunction::from_words(int(n), std::move(words));
}

void write_tt_file(const std::string& path, const BooleanFunction& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << to_tt_text(f);
    if (!out) throw IoError("failed writing " + path);
}

BooleanFunction read_tt_file(const std::string& path, int cap) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tt_text(buf.str(), cap);
}

}  // namespace walshlab
