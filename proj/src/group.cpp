#include "csum/group.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace csum {

std::optional<Group> Group::parse_spec(const std::string& text) {
    std::istringstream in(text);
    std::string kind;
    if (!(in >> kind))
        return std::nullopt;
    if (kind == "int") {
        std::string rest;
        if (in >> rest)
            return std::nullopt;
        return Group::integers();
    }
    if (kind == "zmod") {
        std::string num;
        if (!(in >> num))
            return std::nullopt;
        std::string rest;
        if (in >> rest)
            return std::nullopt;
        for (char c : num)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return std::nullopt;
        errno = 0;
        char* end = nullptr;
        long long k = std::strtoll(num.c_str(), &end, 10);
        if (errno != 0 || *end != '\0' || k < 2)
            return std::nullopt;
        return Group::mod(k);
    }
    return std::nullopt;
}

} // namespace csum
