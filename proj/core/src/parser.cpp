#include "qweyl/parser.hpp"

#include "qweyl/errors.hpp"
#include "qweyl/realization.hpp"
#include "qweyl/root_vectors.hpp"

#include <cctype>
#include <optional>
#include <type_traits>

namespace qweyl {

namespace {

constexpr std::size_t max_depth = 200;
constexpr std::size_t max_literal_digits = 400;
constexpr long small_int_limit = 1000000;

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    std::unique_ptr<Ast> parse() {
        skip_ws();
        if (at_end()) {
            fail(pos_, "expected expression");
        }
        auto e = expr();
        skip_ws();
        if (!at_end()) {
            fail(pos_, "unexpected '" + std::string(1, peek()) + "'");
        }
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;

    [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
        throw SyntaxError(at, msg);
    }

    bool at_end() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) {
            ++pos_;
        }
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) {
            fail(pos_, std::string("expected '") + c + "'");
        }
        ++pos_;
    }
    bool accept(std::string_view s) {
        if (src_.substr(pos_, s.size()) == s) {
            pos_ += s.size();
            return true;
        }
        return false;
    }

    static std::unique_ptr<Ast> node(Ast::Kind k, std::size_t offset) {
        auto a = std::make_unique<Ast>();
        a->kind = k;
        a->offset = offset;
        return a;
    }

    struct DepthGuard {
        Parser& p;
        DepthGuard(Parser& parser, std::size_t at) : p(parser) {
            if (++p.depth_ > max_depth) {
                p.fail(at, "expression nested too deeply");
            }
        }
        ~DepthGuard() { --p.depth_; }
    };

    bool starts_factor() const {
        const char c = peek();
        return is_digit(c) || c == '(' || c == '[' || c == 'x' || c == 'd' || c == 's' ||
               c == 'e' || c == 'f' || c == 'K' || c == 't' || c == 'E' || c == 'q';
    }

    std::unique_ptr<Ast> expr() {
        skip_ws();
        DepthGuard guard(*this, pos_);
        auto sum = node(Ast::Kind::Sum, pos_);
        bool negate = false;
        if (peek() == '-') {
            const std::size_t op = pos_++;
            skip_ws();
            if (!starts_factor()) {
                fail(op, "expected term after '-'");
            }
            negate = true;
        }
        sum->children.push_back(term());
        sum->negated.push_back(negate);
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') {
                break;
            }
            const std::size_t op = pos_++;
            skip_ws();
            if (!starts_factor()) {
                fail(op, std::string("expected term after '") + c + "'");
            }
            sum->children.push_back(term());
            sum->negated.push_back(c == '-');
        }
        if (sum->children.size() == 1 && !sum->negated.front()) {
            return std::move(sum->children.front());
        }
        return sum;
    }

    std::unique_ptr<Ast> term() {
        skip_ws();
        auto product = node(Ast::Kind::Product, pos_);
        product->children.push_back(factor());
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                const std::size_t op = pos_++;
                skip_ws();
                if (!starts_factor()) {
                    fail(op, "expected factor after '*'");
                }
            } else if (!starts_factor()) {
                break;
            }
            product->children.push_back(factor());
        }
        if (product->children.size() == 1) {
            return std::move(product->children.front());
        }
        return product;
    }

    std::unique_ptr<Ast> factor() {
        skip_ws();
        const std::size_t start = pos_;
        const char c = peek();
        if (c == '(') {
            DepthGuard guard(*this, start);
            ++pos_;
            auto inner = expr();
            expect(')');
            return inner;
        }
        if (c == '[') {
            DepthGuard guard(*this, start);
            ++pos_;
            auto b = node(Ast::Kind::Bracket, start);
            b->children.push_back(expr());
            expect(',');
            b->children.push_back(expr());
            expect(']');
            if (accept("_{q^-1}")) {
                b->bracket_exp = -1;
            } else if (accept("_q")) {
                b->bracket_exp = 1;
            } else if (peek() == '_') {
                fail(pos_, "expected '_q' or '_{q^-1}'");
            }
            return b;
        }
        if (is_digit(c)) {
            auto num = node(Ast::Kind::Number, start);
            while (is_digit(peek())) {
                num->digits.push_back(src_[pos_++]);
                if (num->digits.size() > max_literal_digits) {
                    fail(start, "integer literal too long");
                }
            }
            return num;
        }
        switch (c) {
        case 'q': {
            ++pos_;
            auto qp = node(Ast::Kind::QPower, start);
            int k = 1;
            if (peek() == '^') {
                ++pos_;
                k = signed_int();
            }
            qp->ints = {k};
            return qp;
        }
        case 'x':
            if (peek(1) == '^') {
                pos_ += 2;
                auto m = node(Ast::Kind::Monomial, start);
                m->ints = int_list();
                return m;
            }
            return generator();
        case 'd':
        case 's':
        case 'e':
        case 'f':
        case 'K':
            return generator();
        case 't': {
            ++pos_;
            auto t = node(Ast::Kind::Theta, start);
            t->ints = int_list();
            return t;
        }
        case 'E': {
            ++pos_;
            auto r = node(Ast::Kind::Root, start);
            r->ints = int_list();
            if (r->ints.size() != 2) {
                fail(start, "E(i,j) takes two indices");
            }
            return r;
        }
        default:
            break;
        }
        if (at_end()) {
            fail(pos_, "unexpected end of input");
        }
        fail(pos_, "unexpected '" + std::string(1, c) + "'");
    }

    std::unique_ptr<Ast> generator() {
        const std::size_t start = pos_;
        auto g = node(Ast::Kind::Gen, start);
        g->letter = src_[pos_++];
        if (!is_digit(peek())) {
            fail(pos_, std::string("expected index after '") + g->letter + "'");
        }
        g->ints = {unsigned_int()};
        if (peek() == '^') {
            if (g->letter != 's' && g->letter != 'K') {
                fail(pos_, "only s<i> and K<i> can be inverted");
            }
            const std::size_t caret = pos_;
            if (!accept("^-1")) {
                fail(caret, "expected '^-1'");
            }
            g->inverse = true;
        }
        return g;
    }

    int unsigned_int() {
        const std::size_t start = pos_;
        if (!is_digit(peek())) {
            fail(pos_, "expected integer");
        }
        long v = 0;
        while (is_digit(peek())) {
            v = v * 10 + (src_[pos_++] - '0');
            if (v > small_int_limit) {
                fail(start, "integer out of range");
            }
        }
        return static_cast<int>(v);
    }

    int signed_int() {
        skip_ws();
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = src_[pos_++] == '-';
        }
        const int v = unsigned_int();
        return neg ? -v : v;
    }

    std::vector<int> int_list() {
        expect('(');
        std::vector<int> out;
        out.push_back(signed_int());
        for (;;) {
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                out.push_back(signed_int());
                if (out.size() > 4096) {
                    fail(pos_, "index list too long");
                }
                continue;
            }
            break;
        }
        expect(')');
        return out;
    }
};

enum class Context { Operator, Element };

// Values of one expression: every subexpression elaborates to T, scalars
// becoming multiples of the identity operator or of x^(0).
template <typename T>
class Elaborator {
public:
    Elaborator(int n) : n_(n), rank_(static_cast<std::size_t>(n)) {}

    T eval(const Ast& a) {
        switch (a.kind) {
        case Ast::Kind::Sum: {
            T out = scalar(LaurentPoly(0));
            for (std::size_t k = 0; k < a.children.size(); ++k) {
                if (a.negated[k]) {
                    out -= eval(*a.children[k]);
                } else {
                    out += eval(*a.children[k]);
                }
            }
            return out;
        }
        case Ast::Kind::Product: {
            T out = eval(*a.children.front());
            for (std::size_t k = 1; k < a.children.size(); ++k) {
                out = times(out, eval(*a.children[k]));
            }
            return out;
        }
        case Ast::Kind::Number:
        {
            // cpp_int reads a leading 0 as octal
            const auto first = a.digits.find_first_not_of('0');
            return scalar(LaurentPoly(
                first == std::string::npos ? BigInt(0) : BigInt(a.digits.substr(first))));
        }
        case Ast::Kind::QPower:
            return scalar(LaurentPoly::monomial(a.ints.front()));
        case Ast::Kind::Monomial:
            return monomial(a);
        default:
            return operator_atom(a);
        }
    }

private:
    int n_;
    std::size_t rank_;
    std::optional<Realization> realization_;

    static constexpr Context context =
        std::is_same_v<T, Operator> ? Context::Operator : Context::Element;

    T scalar(const LaurentPoly& c) const {
        if constexpr (context == Context::Operator) {
            return Operator::scalar(rank_, c);
        } else {
            return Element::scalar(rank_, c);
        }
    }

    static T times(const T& a, const T& b) {
        if constexpr (context == Context::Operator) {
            return a * b;
        } else {
            return mul(a, b);
        }
    }

    T monomial(const Ast& a) {
        if constexpr (context == Context::Operator) {
            throw ContextMix("monomial x^(...) at offset " + std::to_string(a.offset) +
                             " in an operator expression");
        } else {
            if (a.ints.size() != rank_) {
                throw RankMismatch("monomial at offset " + std::to_string(a.offset) + " has " +
                                   std::to_string(a.ints.size()) + " entries, rank is " +
                                   std::to_string(rank_));
            }
            for (int v : a.ints) {
                if (v < 0 || v > 10000) {
                    throw InvalidArgs("monomial exponent out of range at offset " +
                                      std::to_string(a.offset));
                }
            }
            return Element::monomial(MultiIndex(a.ints));
        }
    }

    T operator_atom(const Ast& a) {
        if constexpr (context == Context::Element) {
            throw ContextMix("operator atom at offset " + std::to_string(a.offset) +
                             " in an element expression");
        } else {
            switch (a.kind) {
            case Ast::Kind::Bracket: {
                const Operator x = eval(*a.children[0]);
                const Operator y = eval(*a.children[1]);
                return q_bracket(x, y, LaurentPoly::monomial(a.bracket_exp));
            }
            case Ast::Kind::Theta:
                if (a.ints.size() != rank_) {
                    throw RankMismatch("t(...) at offset " + std::to_string(a.offset) +
                                       " has " + std::to_string(a.ints.size()) +
                                       " entries, rank is " + std::to_string(rank_));
                }
                return Operator::generator(rank_, GenSymbol::theta(MultiIndex(a.ints)));
            case Ast::Kind::Root:
                return root_op(a.ints[0], a.ints[1], n_);
            case Ast::Kind::Gen:
                return generator(a);
            default:
                throw InvalidArgs("unexpected syntax node");
            }
        }
    }

    Operator generator(const Ast& a) {
        const int i = a.ints.front();
        switch (a.letter) {
        case 'x':
            return Operator::generator(rank_, GenSymbol::x(i));
        case 'd':
            return Operator::generator(rank_, GenSymbol::d(i));
        case 's':
            return Operator::generator(rank_, GenSymbol::sigma(i, a.inverse ? -1 : 1));
        default:
            break;
        }
        if (!realization_) {
            realization_ = build_realization(n_);
        }
        switch (a.letter) {
        case 'e':
            return realization_->generator(Chevalley::E, i);
        case 'f':
            return realization_->generator(Chevalley::F, i);
        default:
            return realization_->generator(a.inverse ? Chevalley::KInv : Chevalley::K, i);
        }
    }
};

void check_rank(int n) {
    if (n < 1) {
        throw InvalidArgs("n must be >= 1");
    }
}

} // namespace

std::unique_ptr<Ast> parse_ast(std::string_view src) { return Parser(src).parse(); }

Operator parse_operator(std::string_view src, int n) {
    check_rank(n);
    const auto ast = parse_ast(src);
    return Elaborator<Operator>(n).eval(*ast);
}

Element parse_element(std::string_view src, int n) {
    check_rank(n);
    const auto ast = parse_ast(src);
    return Elaborator<Element>(n).eval(*ast);
}

BraidWord parse_braid_word(std::string_view src, int n) {
    check_rank(n);
    BraidWord w;
    std::size_t pos = 0;
    bool need_index = true;
    while (pos < src.size()) {
        const char c = src[pos];
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            ++pos;
            continue;
        }
        if (c == ',') {
            if (need_index) {
                throw SyntaxError(pos, "expected index before ','");
            }
            need_index = true;
            ++pos;
            continue;
        }
        if (!is_digit(c)) {
            throw SyntaxError(pos, "unexpected '" + std::string(1, c) + "' in braid word");
        }
        const std::size_t start = pos;
        long v = 0;
        while (pos < src.size() && is_digit(src[pos])) {
            v = v * 10 + (src[pos++] - '0');
            if (v > small_int_limit) {
                throw SyntaxError(start, "integer out of range");
            }
        }
        if (v < 1 || v > n) {
            throw InvalidIndex("reflection index " + std::to_string(v) + " outside 1.." +
                               std::to_string(n));
        }
        w.push_back(static_cast<int>(v));
        need_index = false;
    }
    if (w.empty()) {
        throw SyntaxError(0, "empty braid word");
    }
    if (need_index) {
        throw SyntaxError(src.size(), "expected index after ','");
    }
    return w;
}

} // namespace qweyl
