#include "mild/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "mild/errors.hpp"

namespace mild {

GroupWord GroupWord::gen(int i) {
    if (i < 1) throw std::invalid_argument("generator index must be >= 1");
    GroupWord w;
    w.kind = Kind::Generator;
    w.generator = i;
    return w;
}

GroupWord GroupWord::inverse(GroupWord w) {
    GroupWord out;
    out.kind = Kind::Inverse;
    out.children.push_back(std::move(w));
    return out;
}

GroupWord GroupWord::product(std::vector<GroupWord> ws) {
    GroupWord out;
    out.kind = Kind::Product;
    out.children = std::move(ws);
    return out;
}

GroupWord GroupWord::power(GroupWord base, mpz_class e) {
    GroupWord out;
    out.kind = Kind::Power;
    out.exponent = std::move(e);
    out.children.push_back(std::move(base));
    return out;
}

GroupWord GroupWord::commutator(GroupWord a, GroupWord b) {
    GroupWord out;
    out.kind = Kind::Commutator;
    out.children.push_back(std::move(a));
    out.children.push_back(std::move(b));
    return out;
}

int GroupWord::max_generator() const {
    if (kind == Kind::Generator) return generator;
    int m = 0;
    for (const auto& c : children) m = std::max(m, c.max_generator());
    return m;
}

namespace {

// True when the rendering of w binds tightly enough to take a '^' directly.
bool is_atom(const GroupWord& w) {
    return w.kind == GroupWord::Kind::Generator || w.kind == GroupWord::Kind::Commutator;
}

void render(const GroupWord& w, std::string& out) {
    switch (w.kind) {
        case GroupWord::Kind::Generator:
            out += 'x';
            out += std::to_string(w.generator);
            break;
        case GroupWord::Kind::Inverse:
            if (is_atom(w.children[0])) {
                render(w.children[0], out);
            } else {
                out += '(';
                render(w.children[0], out);
                out += ')';
            }
            out += "^-1";
            break;
        case GroupWord::Kind::Product:
            for (std::size_t k = 0; k < w.children.size(); ++k) {
                if (k > 0) out += '*';
                const auto& c = w.children[k];
                if (c.kind == GroupWord::Kind::Product) {
                    out += '(';
                    render(c, out);
                    out += ')';
                } else {
                    render(c, out);
                }
            }
            if (w.children.empty()) out += "x1^0";  // the empty product is the identity
            break;
        case GroupWord::Kind::Power:
            if (is_atom(w.children[0])) {
                render(w.children[0], out);
            } else {
                out += '(';
                render(w.children[0], out);
                out += ')';
            }
            out += '^';
            out += w.exponent.get_str();
            break;
        case GroupWord::Kind::Commutator:
            out += '[';
            render(w.children[0], out);
            out += ',';
            render(w.children[1], out);
            out += ']';
            break;
    }
}

class WordParser {
  public:
    explicit WordParser(std::string_view text) : text_(text) {}

    GroupWord parse() {
        GroupWord w = word();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return w;
    }

  private:
    GroupWord word() {
        std::vector<GroupWord> factors;
        factors.push_back(term());
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                factors.push_back(term());
            } else {
                break;
            }
        }
        if (factors.size() == 1) return std::move(factors[0]);
        return GroupWord::product(std::move(factors));
    }

    GroupWord term() {
        GroupWord a = atom();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            return GroupWord::power(std::move(a), integer());
        }
        return a;
    }

    GroupWord atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == 'x') {
            ++pos_;
            const mpz_class index = digits();
            if (index < 1 || index > 1000000) fail("generator index out of range");
            return GroupWord::gen(static_cast<int>(index.get_si()));
        }
        if (c == '[') {
            ++pos_;
            GroupWord a = word();
            expect(',');
            GroupWord b = word();
            expect(']');
            return GroupWord::commutator(std::move(a), std::move(b));
        }
        if (c == '(') {
            ++pos_;
            GroupWord w = word();
            expect(')');
            return w;
        }
        fail(std::string("expected generator, '[' or '(', got '") + c + "'");
    }

    mpz_class integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        mpz_class v = digits();
        return neg ? mpz_class(-v) : v;
    }

    mpz_class digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("word parse error at position " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string GroupWord::str() const {
    std::string out;
    render(*this, out);
    return out;
}

GroupWord parse_word(std::string_view text) {
    return WordParser(text).parse();
}

} // namespace mild
