#include "locus/polytext.hpp"

#include "locus/errors.hpp"

#include <cctype>

namespace locus {

namespace {

// expr   := term (('+'|'-') term)*
// term   := power ('*' power)*
// power  := atom ('^' uint)?
// atom   := number | name | '(' expr ')' | ('+'|'-') atom
class PolyParser {
public:
    PolyParser(const std::string& text, const ContextPtr& ctx) : text_(text), ctx_(ctx) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input in polynomial: " + text_);
        return p;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        Polynomial sum = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                sum += term();
            } else if (c == '-') {
                ++pos_;
                sum -= term();
            } else {
                return sum;
            }
        }
    }

    Polynomial term() {
        Polynomial prod = power();
        while (peek() == '*') {
            ++pos_;
            prod = prod * power();
        }
        return prod;
    }

    Polynomial power() {
        Polynomial base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_) throw ParseError("missing exponent in polynomial: " + text_);
            unsigned long e = std::stoul(text_.substr(start, pos_ - start));
            base = base.pow(static_cast<std::uint32_t>(e));
        }
        return base;
    }

    Polynomial atom() {
        char c = peek();
        if (c == '+' || c == '-') {
            ++pos_;
            Polynomial inner = atom();
            return c == '-' ? -inner : inner;
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (peek() != ')') throw ParseError("missing ')' in polynomial: " + text_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
        throw ParseError("unexpected character in polynomial: " + text_);
    }

    Polynomial number() {
        std::size_t start = pos_;
        bool seen_exp = false;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                ++pos_;
            } else if ((c == 'e' || c == 'E') && !seen_exp && pos_ + 1 < text_.size() &&
                       (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
                        text_[pos_ + 1] == '+' || text_[pos_ + 1] == '-')) {
                seen_exp = true;
                pos_ += 2;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                break;
            } else {
                break;
            }
        }
        std::string lit = text_.substr(start, pos_ - start);
        // "3/4" only when the slash is directly between integer literals.
        if (peek() == '/' && lit.find('.') == std::string::npos && !seen_exp) {
            std::size_t save = pos_;
            ++pos_;
            skip_space();
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ > dstart) {
                lit += "/" + text_.substr(dstart, pos_ - dstart);
            } else {
                pos_ = save;
            }
        }
        return Polynomial::constant(ctx_, rational_from_string(lit));
    }

    Polynomial name() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string id = text_.substr(start, pos_ - start);
        int idx = ctx_ ? ctx_->index_of(id) : -1;
        if (idx < 0) throw ParseError("unknown variable '" + id + "' in polynomial: " + text_);
        return Polynomial::variable(ctx_, idx);
    }

    const std::string& text_;
    ContextPtr ctx_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx) {
    return PolyParser(text, ctx).parse();
}

} // namespace locus
