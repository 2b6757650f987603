#include "assoc/rational.hpp"

#include "assoc/errors.hpp"

#include <cctype>

namespace assoc {

NotAScheme::NotAScheme(std::string axiom, std::array<int, 3> witness, const std::string& detail)
    : Error("NotAScheme(axiom " + axiom + ", witness (" + std::to_string(witness[0]) + "," +
            std::to_string(witness[1]) + "," + std::to_string(witness[2]) + ")): " + detail),
      axiom_(std::move(axiom)),
      witness_(witness) {}

KreinViolation::KreinViolation(int i, int j, int k, const std::string& detail)
    : Error("KreinViolation(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
            "): " + detail),
      index_{i, j, k} {}

NotClosed::NotClosed(int distinct_rows, int orbits)
    : Error("NotClosed(" + std::to_string(distinct_rows) + "): merged eigenmatrix has " +
            std::to_string(distinct_rows) + " distinct rows for " + std::to_string(orbits) + " Galois orbits"),
      distinct_rows_(distinct_rows),
      orbits_(orbits) {}

ParseError::ParseError(int line, const std::string& reason)
    : Error("ParseError(line " + std::to_string(line) + "): " + reason), line_(line) {}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (pos == s.size()) return false;
    for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || (!den.empty() && den[0] == '-')) {
        throw ParseError(0, "malformed rational '" + std::string(text) + "'");
    }
    auto strip_plus = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
    Integer p(strip_plus(num));
    Integer q(strip_plus(den));
    if (q == 0) throw DivisionByZero("rational literal '" + std::string(text) + "' has zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace assoc
