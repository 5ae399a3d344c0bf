#include "bifc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bifc {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
        throw std::invalid_argument("not a rational literal: \"" + text + "\"");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: \"" + text + "\"");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace bifc
