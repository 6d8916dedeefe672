#include "arw/expr.hpp"

#include <cctype>

#include "arw/errors.hpp"

namespace arw {

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char take() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of expression", pos);
        return text[pos++];
    }
};

std::string read_digits(Cursor& cur) {
    cur.skip_ws();
    std::string out;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        out.push_back(cur.text[cur.pos++]);
    if (out.empty()) throw ParseError("expected a number", cur.pos);
    return out;
}

Rational read_rational(Cursor& cur) {
    std::string num = read_digits(cur);
    if (cur.peek() == '/') {
        cur.take();
        std::string den = read_digits(cur);
        return Rational(BigInt::from_string(num), BigInt::from_string(den));
    }
    return Rational(BigInt::from_string(num), BigInt(1));
}

Partition read_partition(Cursor& cur) {
    if (cur.take() != '[') throw ParseError("expected '['", cur.pos - 1);
    std::vector<int> parts;
    if (cur.peek() == ']') {
        cur.take();
        return Partition();
    }
    while (true) {
        std::string digits = read_digits(cur);
        if (digits.size() > 6) throw ParseError("partition part out of range", cur.pos);
        parts.push_back(std::stoi(digits));
        char c = cur.take();
        if (c == ']') break;
        if (c != ',') throw ParseError("expected ',' or ']' in partition", cur.pos - 1);
    }
    try {
        return Partition(std::move(parts));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), cur.pos);
    }
}

bool is_basis_letter(char c) {
    return c == 'p' || c == 's' || c == 'h' || c == 'e' || c == 'm';
}

}  // namespace

SymFunc parse_symfunc(std::string_view text, int cap) {
    Cursor cur{text};
    SymFunc out(Basis::Power, cap);
    bool first = true;
    while (!cur.done()) {
        Rational sign(1);
        char c = cur.peek();
        if (c == '+' || c == '-') {
            cur.take();
            if (c == '-') sign = Rational(-1);
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", cur.pos);
        }
        first = false;

        Rational coeff = sign;
        c = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = sign * read_rational(cur);
            if (cur.peek() == '*') {
                cur.take();
            } else {
                // bare constant term
                out.add_term(Partition(), coeff);
                continue;
            }
        }
        c = cur.peek();
        if (!is_basis_letter(c))
            throw ParseError("expected a basis letter p, s, h, e or m", cur.pos);
        cur.take();
        Basis basis = basis_from_letter(c);
        Partition index = read_partition(cur);
        if (index.weight() > out.cap())
            throw ParseError("term weight exceeds the degree cap", cur.pos);
        SymFunc elem = SymFunc::basis_element(basis, index, out.cap()).to_basis(Basis::Power);
        out = out + coeff * elem;
    }
    return out;
}

namespace {

void append_term(std::string& out, bool first, const Rational& coeff, const std::string& body) {
    Rational mag = coeff.is_negative() ? -coeff : coeff;
    if (first) {
        if (coeff.is_negative()) out += "-";
    } else {
        out += coeff.is_negative() ? " - " : " + ";
    }
    if (body.empty()) {
        out += mag.to_string();
    } else if (mag.is_one()) {
        out += body;
    } else {
        out += mag.to_string() + "*" + body;
    }
}

}  // namespace

std::string format_symfunc(const SymFunc& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [la, c] : f.terms()) {
        std::string body;
        if (!la.empty()) body = std::string(1, basis_letter(f.basis())) + la.to_string();
        append_term(out, first, c, body);
        first = false;
    }
    return out;
}

std::string format_tensor(const Tensor2& t) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : t.terms()) {
        if (!first) out += " + ";
        first = false;
        out += c.to_string() + " * " + basis_letter(t.left_basis()) + key.first.to_string() +
               " (x) " + basis_letter(t.right_basis()) + key.second.to_string();
    }
    return out;
}

}  // namespace arw
