#include "permagic/expr.h"

#include <cctype>

namespace permagic {

namespace {

class Parser {
   public:
    Parser(std::string_view text, const SymbolTable &symbols) : text_(text), symbols_(symbols) {
    }

    Cyclotomic parse_all() {
        Cyclotomic v = expr();
        skip();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return v;
    }

    std::vector<Cyclotomic> parse_list() {
        skip();
        char open = peek();
        char close = open == '(' ? ')' : open == '[' ? ']' : '\0';
        if (close == '\0') {
            fail("expected '(' or '['");
        }
        pos_++;
        std::vector<Cyclotomic> out;
        skip();
        if (peek() == close) {
            pos_++;
        } else {
            while (true) {
                out.push_back(expr());
                skip();
                if (peek() == ',') {
                    pos_++;
                    continue;
                }
                if (peek() == close) {
                    pos_++;
                    break;
                }
                fail("expected ',' or closing bracket");
            }
        }
        skip();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return out;
    }

   private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) {
            pos_++;
        }
    }

    char peek() const {
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        skip();
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        pos_++;
    }

    Cyclotomic expr() {
        Cyclotomic acc = term();
        while (true) {
            skip();
            char c = peek();
            if (c == '+') {
                pos_++;
                acc += term();
            } else if (c == '-') {
                pos_++;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Cyclotomic term() {
        Cyclotomic acc = unary();
        while (true) {
            skip();
            char c = peek();
            if (c == '*') {
                pos_++;
                acc *= unary();
            } else if (c == '/') {
                pos_++;
                Cyclotomic den = unary();
                if (den.is_zero()) {
                    fail("division by zero");
                }
                acc /= den;
            } else {
                return acc;
            }
        }
    }

    Cyclotomic unary() {
        skip();
        if (peek() == '-') {
            pos_++;
            return -unary();
        }
        if (peek() == '+') {
            pos_++;
            return unary();
        }
        return power();
    }

    Cyclotomic power() {
        Cyclotomic base = atom();
        skip();
        if (peek() == '^') {
            pos_++;
            Cyclotomic e = unary();
            if (!e.is_rational() || e.rational_value().get_den() != 1) {
                fail("exponent must be an integer");
            }
            long k = e.rational_value().get_num().get_si();
            if (k < 0 && base.is_zero()) {
                fail("zero to a negative power");
            }
            return base.pow(k);
        }
        return base;
    }

    mpq_class rational_arg() {
        expect('(');
        Cyclotomic v = expr();
        expect(')');
        if (!v.is_rational()) {
            fail("argument must be rational");
        }
        return v.rational_value();
    }

    long integer_arg() {
        mpq_class q = rational_arg();
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
            fail("argument must be an integer");
        }
        return q.get_num().get_si();
    }

    Cyclotomic atom() {
        skip();
        char c = peek();
        if (c == '(') {
            pos_++;
            Cyclotomic v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos_;
            while (std::isdigit((unsigned char)peek())) {
                pos_++;
            }
            mpz_class z(std::string(text_.substr(start, pos_ - start)));
            return Cyclotomic(mpq_class(z));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos_;
            while (std::isalnum((unsigned char)peek()) || peek() == '_' || peek() == '\'') {
                pos_++;
            }
            std::string name(text_.substr(start, pos_ - start));
            auto it = symbols_.find(name);
            if (it != symbols_.end()) {
                return it->second;
            }
            if (name == "i") {
                return Cyclotomic::i();
            }
            if (name == "E" || name == "w") {
                long n = integer_arg();
                if (n < 1) {
                    fail("root of unity order must be positive");
                }
                return Cyclotomic::root_of_unity(n, 1);
            }
            if (name == "sqrt") {
                long n = integer_arg();
                if (n < 0) {
                    fail("sqrt needs a nonnegative integer");
                }
                return Cyclotomic::sqrt(n);
            }
            if (name == "cospi") {
                return Cyclotomic::cos_pi(rational_arg());
            }
            if (name == "sinpi") {
                return Cyclotomic::sin_pi(rational_arg());
            }
            pos_ = start;
            fail("unknown name '" + name + "'");
        }
        fail("expected a number, name or '('");
    }

    std::string_view text_;
    const SymbolTable &symbols_;
    size_t pos_ = 0;
};

}  // namespace

Cyclotomic parse_cyclotomic(std::string_view text, const SymbolTable &symbols) {
    return Parser(text, symbols).parse_all();
}

std::vector<Cyclotomic> parse_vector(std::string_view text, const SymbolTable &symbols) {
    return Parser(text, symbols).parse_list();
}

}  // namespace permagic
