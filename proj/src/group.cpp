#include "ordlab/group.hpp"

#include <cctype>

namespace ordlab {

GroupElement generator_image(char letter) {
    switch (letter) {
        case 't': return {1, 0, Dyadic()};
        case 'T': return {-1, 0, Dyadic()};
        case 's': return {0, 1, Dyadic()};
        case 'S': return {0, -1, Dyadic()};
        case 'b': return {0, 0, Dyadic(1)};
        case 'B': return {0, 0, Dyadic(-1)};
        default: throw std::invalid_argument(std::string("unknown letter: ") + letter);
    }
}

GroupElement from_word(const Word& w) {
    GroupElement g;
    for (char c : w) g = multiply(g, generator_image(c));
    return g;
}

std::map<char, long> abelianization(const Word& w) {
    std::map<char, long> counts;
    for (char c : w) {
        char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        counts[lower] += std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
    }
    return counts;
}

std::string element_str(const GroupElement& g) {
    return "(t^" + std::to_string(g.t) + " s^" + std::to_string(g.s) + ", " + g.d.str() + ")";
}

} // namespace ordlab
