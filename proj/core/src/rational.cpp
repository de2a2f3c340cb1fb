#include "defectlab/rational.hpp"

#include <cctype>
#include <ostream>

namespace defectlab {

namespace {

bool valid_integer(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& s) {
    require(!s.empty(), ErrorKind::InvalidInput, "empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        require(valid_integer(num) && valid_integer(den), ErrorKind::InvalidInput,
                "malformed rational literal: " + s);
        Int d(den);
        require(d != 0, ErrorKind::InvalidInput, "rational with zero denominator: " + s);
        return Rational(Int(num), d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        if (head.empty() || head == "+" || head == "-") head += "0";
        require(valid_integer(head), ErrorKind::InvalidInput, "malformed rational literal: " + s);
        require(!tail.empty(), ErrorKind::InvalidInput, "malformed rational literal: " + s);
        for (char c : tail)
            require(std::isdigit(static_cast<unsigned char>(c)), ErrorKind::InvalidInput,
                    "malformed rational literal: " + s);
        Int scale = int_pow(Int(10), tail.size());
        Int whole(head);
        Int frac(tail);
        bool neg = s[0] == '-';
        Int num = abs(whole) * scale + frac;
        if (neg) num = -num;
        return Rational(num, scale);
    }
    require(valid_integer(s), ErrorKind::InvalidInput, "malformed rational literal: " + s);
    return Rational(Int(s));
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussRational GaussRational::parse(const std::string& s) {
    require(!s.empty(), ErrorKind::InvalidInput, "empty Gaussian rational literal");
    // Forms: "a", "bi", "i", "-i", "a+bi", "a-bi"; a and b may be fractions
    // or exact decimals.  The split point is a sign that is not the leading
    // character and does not follow '/' or '.' (exponents are not allowed).
    if (s.back() != 'i') return {Rational::parse(s), Rational(0)};
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size() - 1; i > 0; --i) {
        if (s[i] == '+' || s[i] == '-') {
            split = i;
            break;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '/' && s[i] != '.' && s[i] != 'i')
            fail(ErrorKind::InvalidInput, "malformed Gaussian rational literal: " + s);
    }
    std::string re_part, im_part;
    if (split == std::string::npos) {
        im_part = s.substr(0, s.size() - 1);
    } else {
        re_part = s.substr(0, split);
        im_part = s.substr(split, s.size() - split - 1);
    }
    if (im_part.empty() || im_part == "+")
        im_part = "1";
    else if (im_part == "-")
        im_part = "-1";
    else if (im_part.front() == '+')
        im_part.erase(im_part.begin()); // GMP rejects an explicit leading plus
    Rational re = re_part.empty() ? Rational(0) : Rational::parse(re_part);
    return {re, Rational::parse(im_part)};
}

std::string GaussRational::str() const {
    if (im.is_zero()) return re.str();
    std::string imag = (im == Rational(1)) ? "i" : (im == Rational(-1)) ? "-i" : im.str() + "i";
    if (re.is_zero()) return imag;
    if (im.sign() > 0) return re.str() + "+" + imag;
    return re.str() + imag;
}

} // namespace defectlab
