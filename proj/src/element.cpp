#include "cayley/element.hpp"

#include <sstream>
#include <stdexcept>

namespace cayley {

int x_exponent(const ElementWord& e) {
    int c = 0;
    for (const Token& t : e.tokens) {
        if (t.kind == Token::Kind::XPow) c += t.e;
        else if (t.kind == Token::Kind::State) c += 1;
    }
    return c;
}

ElementWord conjugate_word(Elem g, int level) {
    ElementWord e;
    const int a = level >= 0 ? level : -level;
    const int sign = level >= 0 ? 1 : -1;
    for (int i = 0; i < a; ++i) e.tokens.push_back(Token::x(sign));
    e.tokens.push_back(Token::group(g));
    for (int i = 0; i < a; ++i) e.tokens.push_back(Token::x(-sign));
    return e;
}

ElementWord concat(const ElementWord& a, const ElementWord& b) {
    ElementWord e = a;
    e.tokens.insert(e.tokens.end(), b.tokens.begin(), b.tokens.end());
    return e;
}

ElementWord inverse_word(const GroupTable& g, const ElementWord& e) {
    ElementWord r;
    r.tokens.reserve(e.tokens.size());
    for (auto it = e.tokens.rbegin(); it != e.tokens.rend(); ++it) {
        switch (it->kind) {
            case Token::Kind::XPow: r.tokens.push_back(Token::x(-it->e)); break;
            case Token::Kind::Group: r.tokens.push_back(Token::group(g.inv(it->g))); break;
            case Token::Kind::State:
                r.tokens.push_back(Token::x(-1));
                r.tokens.push_back(Token::group(it->g));
                break;
        }
    }
    return r;
}

Regrouped regroup(const GroupTable& g, const ElementWord& e) {
    Regrouped r;
    int c = 0;
    for (const Token& t : e.tokens) {
        switch (t.kind) {
            case Token::Kind::XPow: c += t.e; break;
            case Token::Kind::Group: r.conjugates.push_back({c, t.g}); break;
            case Token::Kind::State:
                r.conjugates.push_back({c, g.inv(t.g)});
                c += 1;
                break;
        }
    }
    r.x_exp = c;
    return r;
}

std::string to_string(const GroupTable& g, const ElementWord& e) {
    std::ostringstream os;
    bool first = true;
    for (const Token& t : e.tokens) {
        if (!first) os << ' ';
        first = false;
        switch (t.kind) {
            case Token::Kind::XPow: os << (t.e > 0 ? "x" : "x^-1"); break;
            case Token::Kind::State: os << "s:" << g.names[static_cast<size_t>(t.g)]; break;
            case Token::Kind::Group: os << "g:" << g.names[static_cast<size_t>(t.g)]; break;
        }
    }
    return os.str();
}

ElementWord parse_element(const GroupTable& g, const std::string& text) {
    ElementWord e;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "x") {
            e.tokens.push_back(Token::x(1));
        } else if (tok == "x^-1") {
            e.tokens.push_back(Token::x(-1));
        } else if (tok.rfind("s:", 0) == 0 || tok.rfind("g:", 0) == 0) {
            const auto idx = g.find(tok.substr(2));
            if (!idx) throw std::invalid_argument("parse_element: unknown element name in " + tok);
            e.tokens.push_back(tok[0] == 's' ? Token::state(*idx) : Token::group(*idx));
        } else {
            throw std::invalid_argument("parse_element: unknown token " + tok);
        }
    }
    return e;
}

std::vector<Elem> parse_letters(const GroupTable& g, const std::string& text) {
    std::vector<Elem> w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        const auto idx = g.find(tok);
        if (!idx) throw std::invalid_argument("parse_letters: unknown element name " + tok);
        w.push_back(*idx);
    }
    return w;
}

}  // namespace cayley
