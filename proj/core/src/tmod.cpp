#include "bgmod/tmod.hpp"

#include "bgmod/f2.hpp"

#include <stdexcept>

namespace bgmod {

std::string tfamily_name(TFamily f) {
    switch (f) {
        case TFamily::PolyT:  return "Z/2[t]";
        case TFamily::IdealT: return "(t)";
        case TFamily::F1:     return "F(1)";
        case TFamily::PD:     return "P_d";
        case TFamily::PTilde: return "P~_-1";
    }
    return "?";
}

std::string TElement::str() const {
    return "t^" + std::to_string(j);
}

static bool is_pow2(std::int64_t j) { return j > 0 && (j & (j - 1)) == 0; }

bool tfamily_supports(TFamily f, int d, std::int64_t j) {
    switch (f) {
        case TFamily::PolyT:  return j >= 0;
        case TFamily::IdealT: return j >= 1;
        case TFamily::F1:     return is_pow2(j);
        case TFamily::PD:     return j >= d;
        case TFamily::PTilde: return j == -1 || j >= 1;
    }
    return false;
}

std::vector<TElement> t_sq(std::uint32_t i, const TElement& e) {
    if (!tfamily_supports(e.family, e.d, e.j))
        throw std::invalid_argument("t_sq: exponent " + std::to_string(e.j) +
                                    " not in " + tfamily_name(e.family));
    std::int64_t target = e.j + std::int64_t(i);
    if (!binom_mod2(e.j, std::int64_t(i))) return {};
    if (e.family == TFamily::PTilde && target == 0) return {};  // t^0 dropped
    if (!tfamily_supports(e.family, e.d, target)) {
        /* the binomial rule never leaves a family's support */
        throw TheoryError("t_sq: image t^" + std::to_string(target) +
                          " escapes " + tfamily_name(e.family));
    }
    return {TElement{e.family, e.d, target}};
}

}  // namespace bgmod
