#include <maxplus/rational.hpp>

#include <maxplus/errors.hpp>
#include <maxplus/ext_real.hpp>

namespace maxplus {

namespace {

bool signed_digits(std::string_view part) {
    if (!part.empty() && (part[0] == '+' || part[0] == '-')) part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    const std::string s(text);
    // Stricter than mpq_set_str (no whitespace, no bases, no empty parts);
    // also guards the q = 0 case before canonicalize(), which would abort.
    const auto slash = s.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = signed_digits(s);
    } else {
        ok = signed_digits(std::string_view(s).substr(0, slash)) &&
             signed_digits(std::string_view(s).substr(slash + 1));
    }
    if (!ok) throw ParseError("malformed rational literal: '" + s + "'");

    // mpq_set_str accepts '-' but not '+'; drop any leading '+' per part.
    std::string plain;
    plain.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != '+' || (i > 0 && s[i - 1] != '/')) plain += s[i];

    Rat q;
    if (mpq_set_str(q.get_mpq_t(), plain.c_str(), 10) != 0)
        throw ParseError("malformed rational literal: '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const ExtReal& v) { return v.is_bottom() ? "-inf" : to_string(v.value()); }

}  // namespace maxplus
