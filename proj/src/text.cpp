#include "hqdeform/text.hpp"

#include <cctype>

namespace hqdeform {

namespace {

class Parser {
public:
    Parser(const ContextPtr& ctx, const std::string& text, bool allow_w)
        : ctx_(ctx), text_(text), allow_w_(allow_w) {}

    CrossedElement parse() {
        CrossedElement r = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error("parse error at position " + std::to_string(pos_) + " (" + what + ") in: " + text_);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    CrossedElement expr() {
        CrossedElement acc(ctx_);
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        CrossedElement t = term();
        acc += negate ? -t : t;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    CrossedElement term() {
        CrossedElement acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    CrossedElement unary() {
        if (accept('-')) return -unary();
        return power();
    }

    CrossedElement power() {
        CrossedElement base = atom();
        if (!accept('^')) return base;
        std::string e = digits();
        if (e.size() > 4) fail("exponent too large");
        CrossedElement acc = CrossedElement::one(ctx_);
        for (int k = 0; k < std::stoi(e); ++k) acc = acc * base;
        return acc;
    }

    CrossedElement atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            CrossedElement r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            std::size_t save = pos_;
            if (accept('/')) {
                skip();
                if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) num += "/" + digits();
                else pos_ = save;
            }
            return CrossedElement::scalar(ctx_, Scalar::parse(num, ctx_->field()));
        }
        if (c == 'x') {
            ++pos_;
            std::string idx = digits();
            std::size_t i = std::stoul(idx);
            if (i == 0 || i > ctx_->nvars()) fail("variable out of range");
            return CrossedElement::poly(ctx_, Poly::variable(i - 1, ctx_->nvars(), ctx_->field()));
        }
        if (c == 'w') {
            ++pos_;
            if (!accept('[')) fail("expected '['");
            auto close = text_.find(']', pos_);
            if (close == std::string::npos) fail("expected ']'");
            std::string word = text_.substr(pos_, close - pos_);
            pos_ = close + 1;
            GroupIndex g = ctx_->group().parse_word(word);
            if (!allow_w_ && g != ctx_->group().identity()) fail("group element not allowed here");
            return CrossedElement::w(ctx_, g);
        }
        fail("unexpected character");
    }

    const ContextPtr& ctx_;
    const std::string& text_;
    bool allow_w_;
    std::size_t pos_ = 0;
};

}  // namespace

CrossedElement parse_element(const ContextPtr& ctx, const std::string& text) {
    return Parser(ctx, text, true).parse();
}

std::string format_element(const CrossedElement& a) { return a.to_string(); }

Poly parse_poly(FieldSpec field, std::size_t nvars, const std::string& text) {
    Group trivial = make_cyclic(1);
    std::vector<LinearEndo> mats{LinearEndo::identity(nvars, field)};
    Representation rho(trivial, mats);
    auto ctx = std::make_shared<const AlgebraContext>(field, nvars, trivial, Cocycle(1, field), rho);
    CrossedElement e = Parser(ctx, text, false).parse();
    return e.component(0);
}

}  // namespace hqdeform
