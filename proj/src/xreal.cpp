#include "smalldiv/xreal.hpp"

#include <cstdio>
#include <vector>

namespace smalldiv {

std::string XReal::str(int digits) const {
    if (digits < 2) digits = 2;
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data());
}

} // namespace smalldiv
