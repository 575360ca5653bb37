#include "fairclust/ext_real.hpp"

#include <cstdio>
#include <cstdlib>

namespace fairclust {

std::string ExtReal::to_string() const {
    if (is_inf()) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v_);
    return buf;
}

ExtReal ExtReal::parse(const std::string& token) {
    if (token == "inf" || token == "Inf" || token == "INF") return inf();
    char* end = nullptr;
    double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0')
        throw std::invalid_argument("ExtReal::parse: bad token '" + token + "'");
    return from_raw(v);
}

}  // namespace fairclust
