#include "pentad/rational.hpp"

#include "pentad/error.hpp"

#include <cctype>

namespace pentad {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat rat_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        fail("decimal_literal", "decimal literals are not exact, use a/b: '" + text + "'");
    auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        fail("malformed_rational", "not a rational literal: '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0) fail("zero_denominator", "denominator is zero in '" + text + "'");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::vector<Rat> normalize_projective(const std::vector<Rat>& coords) {
    for (const Rat& c : coords) {
        if (!is_zero(c)) {
            std::vector<Rat> out;
            out.reserve(coords.size());
            for (const Rat& x : coords) out.push_back(x / c);
            return out;
        }
    }
    fail("zero_vector", "projective point has no nonzero coordinate");
}

} // namespace pentad
