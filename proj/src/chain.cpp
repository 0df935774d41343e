#include "modscl/chain.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace modscl {

void Chain::add(const CyclicWord& w, const Rational& coeff) {
    if (coeff == 0) return;
    CyclicWord cw = canonicalize(w).word;
    std::string key = cw.str();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, std::make_pair(cw, coeff));
    } else {
        it->second.second += coeff;
        if (it->second.second == 0) terms_.erase(it);
    }
}

Chain Chain::operator+(const Chain& o) const {
    Chain out = *this;
    for (const auto& [k, tv] : o.terms_) out.add(tv.first, tv.second);
    return out;
}

Chain Chain::scaled(const Rational& s) const {
    Chain out;
    for (const auto& [k, tv] : terms_) out.add(tv.first, tv.second * s);
    return out;
}

std::string Chain::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, tv] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (tv.second != 1) out << to_string(tv.second) << "*";
        out << k;
    }
    return out.str();
}

Chain parse_chain(const std::string& text) {
    Chain c;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size()) throw std::invalid_argument("empty chain");
    while (i < text.size()) {
        skip_ws();
        // optional coefficient: [-]digits[/digits] '*'
        Rational coeff(1);
        std::size_t save = i;
        if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '-')) {
            std::size_t start = i;
            if (text[i] == '-') ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i < text.size() && text[i] == '/') {
                ++i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            }
            std::size_t end = i;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                coeff = parse_rational(text.substr(start, end - start));
                ++i;
                skip_ws();
            } else {
                i = save;  // digits belonged to nothing; let word parser reject
            }
        }
        std::size_t wstart = i;
        while (i < text.size() && text[i] != '+') ++i;
        std::string wtext = text.substr(wstart, i - wstart);
        c.add(parse_word(wtext), coeff);
        if (i < text.size() && text[i] == '+') ++i;
    }
    return c;
}

int homology_residue(const CyclicWord& w) {
    long v = w.exponent_sum(Letter::R) - w.exponent_sum(Letter::L);
    long r = v % 6;
    if (r < 0) r += 6;
    return static_cast<int>(r);
}

HomologyClass homology_class(const Chain& c) {
    Rational total(0);
    for (const auto& [k, tv] : c.terms()) {
        long v = tv.first.exponent_sum(Letter::R) - tv.first.exponent_sum(Letter::L);
        total += tv.second * Rational(v);
    }
    HomologyClass out;
    if (total.get_den() != 1) {
        out.integral = false;
        return out;
    }
    Integer num = total.get_num();
    Integer r = num % 6;
    if (r < 0) r += 6;
    out.residue = static_cast<int>(r.get_si());
    return out;
}

}  // namespace modscl
