#include "conc/ket_parser.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace conc {

namespace {

struct KetTerm {
    cplx coeff;
    std::vector<int> labels;
};

// Recursive-descent parser over the grammar:
//   expr    := term (('+'|'-') term)*
//   term    := coeff ('*' ket | '*'? '(' ketsum ')') | ket
//   ketsum  := ket (('+'|'-') ket)*
//   coeff   := cfactor (('*'|'/') cfactor)*
//   cfactor := number 'i'? | 'i' | 'pi' | 'sqrt(' coeff ')' | 'exp(' coeff ')'
//              | '(' coeff (('+'|'-') coeff)? ')'
//   ket     := '|' labels '>'
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    std::vector<KetTerm> parse() {
        std::vector<KetTerm> terms;
        parse_expr(terms);
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return terms;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) { throw SyntaxError(pos_, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    // True when, after an opening paren at pos_, the first non-space
    // character is '|' -- i.e. the parens wrap a ketsum, not a coefficient.
    bool paren_wraps_ket() const {
        std::size_t p = pos_ + 1;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        return p < text_.size() && text_[p] == '|';
    }

    void parse_expr(std::vector<KetTerm>& terms) {
        double sign = 1.0;
        if (accept('-'))
            sign = -1.0;
        else
            accept('+');
        parse_term(terms, sign);
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                parse_term(terms, c == '-' ? -1.0 : 1.0);
            } else {
                break;
            }
        }
    }

    void parse_term(std::vector<KetTerm>& terms, double sign) {
        char c = peek();
        if (c == '|') {
            terms.push_back({cplx{sign, 0.0}, parse_ket_body()});
            return;
        }
        if (c == '(' && paren_wraps_ket()) {
            parse_ketsum_group(terms, cplx{sign, 0.0});
            return;
        }
        cplx coeff = sign * parse_coeff();
        c = peek();
        if (c == '*') {
            ++pos_;
            c = peek();
            if (c == '|') {
                terms.push_back({coeff, parse_ket_body()});
            } else if (c == '(') {
                parse_ketsum_group(terms, coeff);
            } else {
                fail("expected ket or '(' after '*'");
            }
        } else if (c == '(') {
            parse_ketsum_group(terms, coeff);
        } else {
            fail("expected '*', '(' or '|' after coefficient");
        }
    }

    void parse_ketsum_group(std::vector<KetTerm>& terms, cplx coeff) {
        expect('(');
        double sign = 1.0;
        for (;;) {
            if (peek() != '|')
                fail("expected ket");
            terms.push_back({coeff * sign, parse_ket_body()});
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                sign = (c == '-') ? -1.0 : 1.0;
                continue;
            }
            break;
        }
        expect(')');
    }

    cplx parse_coeff() {
        cplx value = parse_cfactor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                // '*(' starts a ketsum group, handled by the caller
                if (paren_wraps_ket_after_star()) break;
                ++pos_;
                value *= parse_cfactor();
            } else if (c == '/') {
                ++pos_;
                cplx denom = parse_cfactor();
                if (denom == cplx{0.0, 0.0})
                    fail("division by zero");
                value /= denom;
            } else {
                break;
            }
        }
        return value;
    }

    bool paren_wraps_ket_after_star() const {
        std::size_t p = pos_ + 1;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        if (p >= text_.size()) return false;
        if (text_[p] == '|') return true;
        if (text_[p] != '(') return false;
        ++p;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        return p < text_.size() && text_[p] == '|';
    }

    cplx parse_cfactor() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double v = parse_number();
            if (pos_ < text_.size() && text_[pos_] == 'i') {
                ++pos_;
                return cplx{0.0, v};
            }
            return cplx{v, 0.0};
        }
        if (c == '(') {
            ++pos_;
            cplx v = parse_coeff();
            char op = peek();
            if (op == '+' || op == '-') {
                ++pos_;
                cplx rhs = parse_coeff();
                v += (op == '-') ? -rhs : rhs;
            }
            expect(')');
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word = parse_word();
            if (word == "i") return cplx{0.0, 1.0};
            if (word == "pi") return cplx{M_PI, 0.0};
            if (word == "sqrt" || word == "exp") {
                expect('(');
                cplx arg = parse_coeff();
                expect(')');
                return word == "sqrt" ? std::sqrt(arg) : std::exp(arg);
            }
            pos_ -= word.size();
            fail("unknown identifier '" + word + "'");
        }
        fail("expected coefficient");
    }

    std::string parse_word() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    double parse_number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        if (pos_ == start)
            fail("expected number");
        // optional exponent; 'e' only counts when followed by digits
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                pos_ = p;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
        }
        return std::strtod(text_.c_str() + start, nullptr);
    }

    std::vector<int> parse_ket_body() {
        expect('|');
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '>' && text_[pos_] != '|')
            ++pos_;
        if (pos_ >= text_.size() || text_[pos_] != '>')
            fail("expected '>'");
        std::string body = text_.substr(start, pos_ - start);
        ++pos_;  // consume '>'

        std::vector<int> labels;
        if (body.find(',') != std::string::npos) {
            std::size_t i = 0;
            while (i < body.size()) {
                std::size_t j = body.find(',', i);
                if (j == std::string::npos) j = body.size();
                std::string piece = body.substr(i, j - i);
                if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
                    throw SyntaxError(start + i, "expected numeric label");
                labels.push_back(std::atoi(piece.c_str()));
                i = j + 1;
            }
        } else {
            for (std::size_t i = 0; i < body.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(body[i])))
                    throw SyntaxError(start + i, "expected digit label");
                labels.push_back(body[i] - '0');
            }
        }
        if (labels.empty())
            throw SyntaxError(start, "empty ket");
        return labels;
    }
};

}  // namespace

PureState parse_ket(const std::string& text, std::optional<QuditDims> dims) {
    std::vector<KetTerm> terms = Parser(text).parse();

    std::size_t arity = terms.front().labels.size();
    for (const KetTerm& t : terms) {
        if (t.labels.size() != arity)
            throw Error(errc::dimension_mismatch, "kets of unequal particle count");
    }

    QuditDims qd = [&] {
        if (dims) {
            if (static_cast<std::size_t>(dims->particle_count()) != arity)
                throw Error(errc::dimension_mismatch,
                            "explicit dims do not match ket arity");
            return *dims;
        }
        std::vector<int> inferred(arity, 2);
        for (const KetTerm& t : terms)
            for (std::size_t i = 0; i < arity; ++i)
                inferred[i] = std::max(inferred[i], t.labels[i] + 1);
        return QuditDims(inferred);
    }();

    for (const KetTerm& t : terms)
        for (std::size_t i = 0; i < arity; ++i)
            if (t.labels[i] >= qd.dim(static_cast<int>(i)))
                throw Error(errc::dimension_mismatch,
                            "label " + std::to_string(t.labels[i]) +
                                " exceeds dimension of particle " + std::to_string(i));

    std::vector<cplx> amps(qd.total());
    for (const KetTerm& t : terms)
        amps[qd.flat_index(t.labels)] += t.coeff;

    return PureState(std::move(qd), std::move(amps));  // throws ZeroState if all cancel
}

}  // namespace conc
