#include "posetpoly/rational.hpp"

#include "posetpoly/errors.hpp"

namespace posetpoly {

std::string ratToString(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat ratFromString(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) throw ParseError("malformed rational literal: " + s);
    }
    try {
        Rat r(s);
        r.canonicalize();
        if (r.get_den() == 0) throw ParseError("zero denominator in rational literal: " + s);
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational literal: " + s);
    }
}

bool isInteger(const Rat& r) { return r.get_den() == 1; }

bool isZeroOne(const Rat& r) { return r == 0 || r == 1; }

} // namespace posetpoly
