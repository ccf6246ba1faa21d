#include "isomeric/rational.hpp"

namespace isomeric {

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const GaussRat& z) {
    if (z.im == 0) return z.re.get_str();
    std::string imag;
    if (z.im == 1)
        imag = "i";
    else if (z.im == -1)
        imag = "-i";
    else
        imag = z.im.get_str() + "*i";
    if (z.re == 0) return imag;
    std::string out = "(" + z.re.get_str();
    if (imag[0] != '-') out += "+";
    out += imag + ")";
    return out;
}

}  // namespace isomeric
