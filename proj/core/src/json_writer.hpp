#ifndef SHACHOM_SRC_JSON_WRITER_HPP
#define SHACHOM_SRC_JSON_WRITER_HPP

#include <cstdio>
#include <string>

// Minimal append-style JSON writing. Exports must be byte-stable across runs
// and platforms, so doubles go through one fixed "%.17g" formatter instead of
// a general-purpose serializer.

namespace shachom::detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::string json_str(const std::string& s) {
    return "\"" + json_escape(s) + "\"";
}

} // namespace shachom::detail

#endif
