#include <semiconj/expr.hpp>

#include <semiconj/errors.hpp>

#include <cctype>

namespace semiconj {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    RationalFunction run() {
        RationalFunction r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

  private:
    RationalFunction expr() {
        RationalFunction r = term();
        while (true) {
            skip_ws();
            if (match('+')) r = r + term();
            else if (match('-')) r = r - term();
            else return r;
        }
    }

    RationalFunction term() {
        RationalFunction r = factor();
        while (true) {
            skip_ws();
            if (match('*')) r = r * factor();
            else if (match('/')) r = r / factor();
            else return r;
        }
    }

    RationalFunction factor() {
        skip_ws();
        if (match('-')) return -factor();
        RationalFunction base = atom();
        skip_ws();
        if (match('^')) {
            skip_ws();
            bool neg = match('-');
            long e = integer();
            return base.pow(static_cast<int>(neg ? -e : e));
        }
        return base;
    }

    RationalFunction atom() {
        skip_ws();
        if (match('(')) {
            RationalFunction r = expr();
            skip_ws();
            if (!match(')')) fail("expected ')'");
            return r;
        }
        if (pos_ < s_.size() && (s_[pos_] == 'z' || s_[pos_] == 'x')) {
            ++pos_;
            return RationalFunction::identity();
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            return RationalFunction(Q(Int(digits())));
        }
        fail("expected a factor");
        return RationalFunction();  // unreachable
    }

    long integer() {
        std::string d = digits();
        try {
            return std::stol(d);
        } catch (...) {
            fail("exponent out of range");
        }
        return 0;
    }

    std::string digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool match(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw parse_error(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

RationalFunction parse_function(const std::string& text) { return Parser(text).run(); }

} // namespace semiconj
