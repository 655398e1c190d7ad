#ifndef FOURSQ_CERTLANG_HPP
#define FOURSQ_CERTLANG_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <foursq/symrat.hpp>

namespace foursq {

/// Parse failure; position is a 0-based byte offset into the source.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string &message);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable expression tree over integer literals, the symbols q, X, Y,
/// the binary operators + - * /, unary minus and integer powers.
class CertExpr {
public:
    enum class Kind { integer, symbol, negate, add, subtract, multiply, divide, power };

    /// The literal 0.
    CertExpr();

    static CertExpr integer(Integer value);
    static CertExpr symbol(char name);
    static CertExpr negate(CertExpr operand);
    static CertExpr binary(Kind kind, CertExpr lhs, CertExpr rhs);
    static CertExpr power(CertExpr base, long exponent);

    Kind kind() const noexcept { return node_->kind; }
    const Integer &value() const { return node_->value; }
    char name() const { return node_->name; }
    long exponent() const { return node_->exponent; }
    const CertExpr &lhs() const { return *node_->lhs; }
    const CertExpr &rhs() const { return *node_->rhs; }
    /// Operand of negate and base of power.
    const CertExpr &operand() const { return *node_->lhs; }

    std::size_t depth() const;

    friend bool operator==(const CertExpr &a, const CertExpr &b);

private:
    struct Node {
        Kind kind = Kind::integer;
        Integer value;
        char name = 0;
        long exponent = 0;
        std::shared_ptr<const CertExpr> lhs;
        std::shared_ptr<const CertExpr> rhs;
    };

    explicit CertExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := ['-'] base [('^' | '**') signed-int]
///   base   := int | 'q' | 'X' | 'Y' | '(' expr ')'
/// Whitespace is ignored.
CertExpr parse(std::string_view src);

/// Canonical text form; parse(print(e)) == e.
std::string print(const CertExpr &e);

RationalFn eval_rational(const CertExpr &e);

/// a * n + b
struct LinearForm {
    std::int64_t coef_n = 0;
    std::int64_t constant = 0;

    std::int64_t operator()(std::int64_t n) const { return coef_n * n + constant; }
    friend bool operator==(const LinearForm &, const LinearForm &) = default;
};

LinearForm parse_linear_form(std::string_view src);
std::string to_string(const LinearForm &f);

/// L(n+1) - L(n) for the summed identity.
enum class RhsStep {
    zero,
    twice_signed_square, // 2*(-q)^((n+1)^2)
};

RhsStep parse_rhs_step(std::string_view src);
std::string to_string(RhsStep s);

/// One WZ verification problem, written in ratio form:
///   ratio_n = F(n+1,k)/F(n,k), ratio_k = F(n,k)/F(n,k-1), cert = G(n,k)/F(n,k).
struct CertificateSet {
    std::string name;
    CertExpr ratio_n;
    CertExpr ratio_k;
    CertExpr cert;
    LinearForm k_min;
    LinearForm k_max;
    RhsStep rhs_step = RhsStep::zero;
};

/// Parses the block format (see README). Throws LoadError with a line number.
std::vector<CertificateSet> load_certificates(std::string_view src);
std::vector<CertificateSet> load_certificate_file(const std::filesystem::path &path);

/// Inverse of load_certificates for a single block.
std::string format_certificate(const CertificateSet &c);

} // namespace foursq

#endif
