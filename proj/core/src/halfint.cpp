#include "uqgl21/halfint.hpp"

#include <cstdlib>

#include "uqgl21/errors.hpp"

namespace uqgl21 {

std::string HalfInt::str() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty half-integer");
    std::size_t pos = 0;
    long p = 0;
    try {
        p = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad half-integer '" + s + "'");
    }
    if (pos == s.size()) return HalfInt::whole(p);
    if (s.substr(pos) == "/2") return HalfInt(p);
    throw ParseError("bad half-integer '" + s + "'");
}

}  // namespace uqgl21
