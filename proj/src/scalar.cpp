#include "nilslice/scalar.hpp"

#include <stdexcept>

namespace nilslice {

namespace {

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rat r(s);
    r.canonicalize();
    return r;
}

}  // namespace

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re != 0) out = rat_str(re);
    if (im != 0) {
        if (im > 0 && !out.empty()) out += "+";
        out += rat_str(im) + "*i";
    }
    return out;
}

GaussianRational GaussianRational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s == "0") return GaussianRational();
    const auto istar = s.rfind("*i");
    if (istar == std::string::npos) return GaussianRational(rat_parse(s));
    // Split off the imaginary coefficient: the separator is a '+' or '-'
    // at depth 0 past position 0 (rational literals contain no interior '+'
    // and a '-' only at their front).
    size_t split = std::string::npos;
    for (size_t k = 1; k < istar; ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '+' && s[k - 1] != '-') {
            split = k;
        }
    }
    std::string re_part, im_part;
    if (split == std::string::npos) {
        im_part = s.substr(0, istar);
    } else {
        re_part = s.substr(0, split);
        im_part = s.substr(split, istar - split);
        if (!im_part.empty() && im_part[0] == '+') im_part = im_part.substr(1);
    }
    Rat re = re_part.empty() ? Rat(0) : rat_parse(re_part);
    Rat im = im_part.empty() || im_part == "-" ? Rat(im_part.empty() ? 1 : -1) : rat_parse(im_part);
    return {re, im};
}

}  // namespace nilslice
