#include <foursq/certlang.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace foursq {

ParseError::ParseError(std::size_t position, const std::string &message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message), position_(position)
{
}

CertExpr::CertExpr() : CertExpr(integer(0)) {}

CertExpr CertExpr::integer(Integer value)
{
    if (sgn(value) < 0) {
        throw std::invalid_argument("integer literals are nonnegative; use negate");
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::integer;
    n->value = std::move(value);
    return CertExpr(std::move(n));
}

CertExpr CertExpr::symbol(char name)
{
    if (name != 'q' && name != 'X' && name != 'Y') {
        throw std::invalid_argument(std::string("unknown symbol '") + name + "'");
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::symbol;
    n->name = name;
    return CertExpr(std::move(n));
}

CertExpr CertExpr::negate(CertExpr operand)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::negate;
    n->lhs = std::make_shared<const CertExpr>(std::move(operand));
    return CertExpr(std::move(n));
}

CertExpr CertExpr::binary(Kind kind, CertExpr lhs, CertExpr rhs)
{
    if (kind != Kind::add && kind != Kind::subtract && kind != Kind::multiply && kind != Kind::divide) {
        throw std::invalid_argument("not a binary operator");
    }
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::make_shared<const CertExpr>(std::move(lhs));
    n->rhs = std::make_shared<const CertExpr>(std::move(rhs));
    return CertExpr(std::move(n));
}

CertExpr CertExpr::power(CertExpr base, long exponent)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::power;
    n->exponent = exponent;
    n->lhs = std::make_shared<const CertExpr>(std::move(base));
    return CertExpr(std::move(n));
}

std::size_t CertExpr::depth() const
{
    switch (kind()) {
    case Kind::integer:
    case Kind::symbol:
        return 1;
    case Kind::negate:
    case Kind::power:
        return 1 + operand().depth();
    default:
        return 1 + std::max(lhs().depth(), rhs().depth());
    }
}

bool operator==(const CertExpr &a, const CertExpr &b)
{
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.kind() != b.kind()) {
        return false;
    }
    using K = CertExpr::Kind;
    switch (a.kind()) {
    case K::integer:
        return a.value() == b.value();
    case K::symbol:
        return a.name() == b.name();
    case K::negate:
        return a.operand() == b.operand();
    case K::power:
        return a.exponent() == b.exponent() && a.operand() == b.operand();
    default:
        return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
}

namespace {

enum class Tok { integer, symbol, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])) != 0) {
                ++i;
            }
            out.push_back({Tok::integer, start, std::string(src.substr(start, i - start))});
            continue;
        }
        switch (c) {
        case 'q':
        case 'X':
        case 'Y':
            out.push_back({Tok::symbol, start, std::string(1, c)});
            break;
        case '+':
            out.push_back({Tok::plus, start, "+"});
            break;
        case '-':
            out.push_back({Tok::minus, start, "-"});
            break;
        case '*':
            if (i + 1 < src.size() && src[i + 1] == '*') {
                out.push_back({Tok::caret, start, "**"});
                ++i;
            } else {
                out.push_back({Tok::star, start, "*"});
            }
            break;
        case '/':
            out.push_back({Tok::slash, start, "/"});
            break;
        case '^':
            out.push_back({Tok::caret, start, "^"});
            break;
        case '(':
            out.push_back({Tok::lparen, start, "("});
            break;
        case ')':
            out.push_back({Tok::rparen, start, ")"});
            break;
        default:
            throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
        ++i;
    }
    out.push_back({Tok::end, src.size(), ""});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    CertExpr parse_all()
    {
        CertExpr e = expr();
        if (peek().kind != Tok::end) {
            fail("unexpected '" + peek().text + "'");
        }
        return e;
    }

private:
    const Token &peek() const { return toks_[pos_]; }
    const Token &next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string &msg) const
    {
        const Token &t = peek();
        throw ParseError(t.pos, t.kind == Tok::end ? msg + " (at end of input)" : msg);
    }

    CertExpr expr()
    {
        CertExpr lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const auto k = next().kind == Tok::plus ? CertExpr::Kind::add : CertExpr::Kind::subtract;
            lhs = CertExpr::binary(k, std::move(lhs), term());
        }
        return lhs;
    }

    CertExpr term()
    {
        CertExpr lhs = factor();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const auto k = next().kind == Tok::star ? CertExpr::Kind::multiply : CertExpr::Kind::divide;
            lhs = CertExpr::binary(k, std::move(lhs), factor());
        }
        return lhs;
    }

    CertExpr factor()
    {
        const bool negated = peek().kind == Tok::minus;
        if (negated) {
            next();
        }
        CertExpr b = base();
        if (peek().kind == Tok::caret) {
            next();
            b = CertExpr::power(std::move(b), signed_int());
        }
        return negated ? CertExpr::negate(std::move(b)) : b;
    }

    long signed_int()
    {
        bool negative = false;
        if (peek().kind == Tok::minus || peek().kind == Tok::plus) {
            negative = next().kind == Tok::minus;
        }
        if (peek().kind != Tok::integer) {
            fail("exponent must be an integer literal");
        }
        const Token &t = peek();
        Integer v(t.text);
        if (negative) {
            v = -v;
        }
        if (!v.fits_slong_p()) {
            fail("exponent out of range");
        }
        next();
        return v.get_si();
    }

    CertExpr base()
    {
        const Token &t = peek();
        switch (t.kind) {
        case Tok::integer: {
            next();
            return CertExpr::integer(Integer(t.text));
        }
        case Tok::symbol:
            next();
            return CertExpr::symbol(t.text[0]);
        case Tok::lparen: {
            next();
            CertExpr inner = expr();
            if (peek().kind != Tok::rparen) {
                fail("expected ')'");
            }
            next();
            return inner;
        }
        case Tok::end:
            fail("expected an operand");
        default:
            fail("unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// Binding strength used by the printer: sums 1, products 2, unary minus 3, powers 4, atoms 5.
int precedence(const CertExpr &e)
{
    using K = CertExpr::Kind;
    switch (e.kind()) {
    case K::add:
    case K::subtract:
        return 1;
    case K::multiply:
    case K::divide:
        return 2;
    case K::negate:
        return 3;
    case K::power:
        return 4;
    default:
        return 5;
    }
}

void print_to(std::string &out, const CertExpr &e);

void print_wrapped(std::string &out, const CertExpr &e, bool wrap)
{
    if (wrap) {
        out += '(';
    }
    print_to(out, e);
    if (wrap) {
        out += ')';
    }
}

void print_to(std::string &out, const CertExpr &e)
{
    using K = CertExpr::Kind;
    switch (e.kind()) {
    case K::integer:
        out += e.value().get_str();
        return;
    case K::symbol:
        out += e.name();
        return;
    case K::negate:
        out += '-';
        // the grammar only allows a base or a power after unary minus
        print_wrapped(out, e.operand(), precedence(e.operand()) < 4);
        return;
    case K::power:
        print_wrapped(out, e.operand(), precedence(e.operand()) < 5);
        out += '^';
        out += std::to_string(e.exponent());
        return;
    case K::add:
    case K::subtract: {
        print_wrapped(out, e.lhs(), false);
        out += e.kind() == K::add ? " + " : " - ";
        print_wrapped(out, e.rhs(), precedence(e.rhs()) <= 1);
        return;
    }
    case K::multiply:
    case K::divide: {
        print_wrapped(out, e.lhs(), precedence(e.lhs()) < 2);
        out += e.kind() == K::multiply ? '*' : '/';
        print_wrapped(out, e.rhs(), precedence(e.rhs()) <= 2);
        return;
    }
    }
}

} // namespace

CertExpr parse(std::string_view src)
{
    return Parser(src).parse_all();
}

std::string print(const CertExpr &e)
{
    std::string out;
    print_to(out, e);
    return out;
}

RationalFn eval_rational(const CertExpr &e)
{
    using K = CertExpr::Kind;
    switch (e.kind()) {
    case K::integer:
        return RationalFn(LaurentPoly(e.value()));
    case K::symbol:
        switch (e.name()) {
        case 'q':
            return RationalFn(LaurentPoly::q());
        case 'X':
            return RationalFn(LaurentPoly::X());
        default:
            return RationalFn(LaurentPoly::Y());
        }
    case K::negate:
        return -eval_rational(e.operand());
    case K::power: {
        RationalFn b = eval_rational(e.operand());
        if (e.exponent() < 0 && b.is_zero()) {
            throw EvalError("negative power of an expression that is identically zero: " + print(e));
        }
        return pow(b, e.exponent());
    }
    case K::add:
        return eval_rational(e.lhs()) + eval_rational(e.rhs());
    case K::subtract:
        return eval_rational(e.lhs()) - eval_rational(e.rhs());
    case K::multiply:
        return eval_rational(e.lhs()) * eval_rational(e.rhs());
    case K::divide: {
        RationalFn d = eval_rational(e.rhs());
        if (d.is_zero()) {
            throw EvalError("division by an expression that is identically zero: " + print(e.rhs()));
        }
        return eval_rational(e.lhs()) / d;
    }
    }
    throw EvalError("malformed expression");
}

namespace {

std::string strip(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c)) == 0) {
            out += c;
        }
    }
    return out;
}

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

LinearForm parse_linear_form(std::string_view src)
{
    const std::string s = strip(src);
    if (s.empty()) {
        throw ParseError(0, "empty linear form");
    }
    LinearForm f;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        const std::size_t term_start = i;
        long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError(i, "expected '+' or '-'");
        }
        first = false;
        std::optional<std::int64_t> number;
        const std::size_t digits_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])) != 0) {
            ++i;
        }
        if (i > digits_start) {
            if (i - digits_start > 15) {
                throw ParseError(digits_start, "integer too large");
            }
            number = std::stoll(s.substr(digits_start, i - digits_start));
        }
        bool has_n = false;
        if (i < s.size() && (s[i] == '*' || s[i] == 'n')) {
            if (s[i] == '*') {
                if (!number) {
                    throw ParseError(i, "expected an integer before '*'");
                }
                ++i;
            }
            if (i >= s.size() || s[i] != 'n') {
                throw ParseError(i, "expected 'n'");
            }
            ++i;
            has_n = true;
        }
        if (!number && !has_n) {
            throw ParseError(term_start, "expected an integer or 'n'");
        }
        const std::int64_t v = sign * number.value_or(1);
        if (has_n) {
            f.coef_n += v;
        } else {
            f.constant += v;
        }
    }
    return f;
}

std::string to_string(const LinearForm &f)
{
    std::string out;
    if (f.coef_n != 0) {
        if (f.coef_n == -1) {
            out = "-n";
        } else if (f.coef_n == 1) {
            out = "n";
        } else {
            out = std::to_string(f.coef_n) + "*n";
        }
    }
    if (f.constant != 0 || out.empty()) {
        if (!out.empty() && f.constant > 0) {
            out += '+';
        }
        out += std::to_string(f.constant);
    }
    return out;
}

RhsStep parse_rhs_step(std::string_view src)
{
    const std::string s = strip(src);
    if (s == "zero" || s == "0") {
        return RhsStep::zero;
    }
    if (s == "2*(-q)^((n+1)^2)" || s == "2*(-q)**((n+1)**2)") {
        return RhsStep::twice_signed_square;
    }
    throw ParseError(0, "rhs_step must be 'zero' or '2*(-q)^((n+1)^2)'");
}

std::string to_string(RhsStep s)
{
    return s == RhsStep::zero ? "zero" : "2*(-q)^((n+1)^2)";
}

std::vector<CertificateSet> load_certificates(std::string_view src)
{
    static const std::vector<std::string> required = {"name", "ratio_n", "ratio_k", "cert", "k_min", "k_max",
                                                      "rhs_step"};
    std::vector<CertificateSet> out;
    std::set<std::string> names;

    std::map<std::string, std::pair<std::string, std::size_t>> block;
    std::size_t block_line = 0;

    auto finish_block = [&]() {
        if (block.empty()) {
            return;
        }
        const std::string where = "certificate block at line " + std::to_string(block_line);
        for (const auto &key : required) {
            if (block.find(key) == block.end()) {
                throw LoadError(where + ": missing field '" + key + "'");
            }
        }
        CertificateSet c;
        c.name = block["name"].first;
        if (c.name.empty()) {
            throw LoadError(where + ": empty name");
        }
        if (!names.insert(c.name).second) {
            throw LoadError(where + ": duplicate certificate name '" + c.name + "'");
        }
        auto field = [&](const std::string &key, auto &&fn) {
            const auto &[text, line] = block[key];
            try {
                return fn(text);
            } catch (const ParseError &e) {
                throw LoadError("line " + std::to_string(line) + ": field '" + key + "': " + e.what());
            } catch (const EvalError &e) {
                throw LoadError("line " + std::to_string(line) + ": field '" + key + "': " + e.what());
            } catch (const SymbolicError &e) {
                throw LoadError("line " + std::to_string(line) + ": field '" + key + "': " + e.what());
            }
        };
        auto ratio = [&](const std::string &key) {
            return field(key, [&](const std::string &text) {
                CertExpr e = parse(text);
                if (eval_rational(e).is_zero() && key != "cert") {
                    throw EvalError("ratio is identically zero");
                }
                return e;
            });
        };
        c.ratio_n = ratio("ratio_n");
        c.ratio_k = ratio("ratio_k");
        c.cert = ratio("cert");
        c.k_min = field("k_min", [](const std::string &t) { return parse_linear_form(t); });
        c.k_max = field("k_max", [](const std::string &t) { return parse_linear_form(t); });
        c.rhs_step = field("rhs_step", [](const std::string &t) { return parse_rhs_step(t); });
        out.push_back(std::move(c));
        block.clear();
    };

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= src.size()) {
        auto end = src.find('\n', start);
        if (end == std::string_view::npos) {
            end = src.size();
        }
        ++line_no;
        const std::string line = trim(src.substr(start, end - start));
        start = end + 1;
        if (line.empty()) {
            finish_block();
            if (end == src.size()) {
                break;
            }
            continue;
        }
        if (line.front() == '#') {
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw LoadError("line " + std::to_string(line_no) + ": expected 'key: value'");
        }
        const std::string key = trim(std::string_view(line).substr(0, colon));
        const std::string value = trim(std::string_view(line).substr(colon + 1));
        if (std::find(required.begin(), required.end(), key) == required.end()) {
            throw LoadError("line " + std::to_string(line_no) + ": unknown field '" + key + "'");
        }
        if (block.empty()) {
            block_line = line_no;
        }
        if (!block.emplace(key, std::make_pair(value, line_no)).second) {
            throw LoadError("line " + std::to_string(line_no) + ": field '" + key + "' given twice in one block");
        }
        if (end == src.size()) {
            break;
        }
    }
    finish_block();
    return out;
}

std::vector<CertificateSet> load_certificate_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw LoadError("cannot open certificate file '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_certificates(ss.str());
}

std::string format_certificate(const CertificateSet &c)
{
    std::string out;
    out += "name: " + c.name + "\n";
    out += "ratio_n: " + print(c.ratio_n) + "\n";
    out += "ratio_k: " + print(c.ratio_k) + "\n";
    out += "cert: " + print(c.cert) + "\n";
    out += "k_min: " + to_string(c.k_min) + "\n";
    out += "k_max: " + to_string(c.k_max) + "\n";
    out += "rhs_step: " + to_string(c.rhs_step) + "\n";
    return out;
}

} // namespace foursq
