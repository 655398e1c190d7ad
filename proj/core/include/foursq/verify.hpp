#ifndef FOURSQ_VERIFY_HPP
#define FOURSQ_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <foursq/certlang.hpp>
#include <foursq/fps.hpp>
#include <foursq/product_term.hpp>
#include <foursq/report.hpp>

namespace foursq {

// Summands of the two finite identities:
//   (a) sum_{k=-n}^{n} 4(-q)^k/(1+q^k)^2 H_n^2 H_{n+k} H_{n-k} = 1
//   (b) sum_{k=0}^{n} 2(-q^{n+1})^k/(1+q^k) H_k/H_n = sum_{k=-n}^{n} (-q)^{k^2}
// H_m is zero for m < 0, so f1 vanishes for |k| > n and f2 for k < 0.

ProductTerm f1_term(std::int64_t n, std::int64_t k);
ProductTerm f2_term(std::int64_t n, std::int64_t k);
ProductTerm g1_term(std::int64_t n, std::int64_t k);
ProductTerm g2_term(std::int64_t n, std::int64_t k);

TruncatedSeries f1(std::int64_t n, std::int64_t k, std::size_t order);
TruncatedSeries f2(std::int64_t n, std::int64_t k, std::size_t order);
TruncatedSeries g1(std::int64_t n, std::int64_t k, std::size_t order);
TruncatedSeries g2(std::int64_t n, std::int64_t k, std::size_t order);

/// Left side of (a): sum_{k=-n}^{n} f1(n,k).
TruncatedSeries l1(std::int64_t n, std::size_t order);
/// Left side of (b): sum_{k=0}^{n} f2(n,k).
TruncatedSeries l2(std::int64_t n, std::size_t order);

/// Which pair of concrete builders a certificate describes.
enum class SummandFamily { lemma_a, lemma_b };

/// "lemma-a" and "lemma-b"; std::nullopt for any other name.
std::optional<SummandFamily> family_for(std::string_view certificate_name);

ProductTerm summand_term(SummandFamily f, std::int64_t n, std::int64_t k);
ProductTerm companion_term(SummandFamily f, std::int64_t n, std::int64_t k);

/// Checks ratio_n - 1 == cert - shift(cert, k -> k-1) / ratio_k as rational functions,
/// i.e. F(n+1,k) - F(n,k) = G(n,k) - G(n,k-1) divided through by F(n,k).
VerificationReport check_wz_symbolic(const CertificateSet &c);

/// Checks F(n+1,k) - F(n,k) = G(n,k) - G(n,k-1) with the concrete builders for every
/// k in [k_min(n) - 1, k_max(n) + 1], boundary terms included.
VerificationReport check_wz_numeric(const CertificateSet &c, std::int64_t n, std::size_t order);

/// Ties the certificate's ratio expressions to the concrete builders: for
/// 1 <= n <= n_max and |k| <= k_abs_max, wherever the terms involved are nonzero,
/// ratio_n * F(n,k) = F(n+1,k), ratio_k * F(n,k-1) = F(n,k) and cert * F(n,k) = G(n,k)
/// after substituting X = q^n, Y = q^k (compared cross-multiplied, as series).
VerificationReport check_ratio_consistency(const CertificateSet &c, std::int64_t n_max, std::int64_t k_abs_max,
                                           std::size_t order);

/// L(n+1) - L(n) equals the certificate's rhs_step, where L(n) sums F(n,k) over [k_min(n), k_max(n)].
VerificationReport check_rhs_step(const CertificateSet &c, std::int64_t n, std::size_t order);

/// Sum over k in [k_min-1, k_max+1] of F(n+1,k) - F(n,k) equals G(n,k_max+1) - G(n,k_min-2).
VerificationReport check_telescoping(const CertificateSet &c, std::int64_t n, std::size_t order);

VerificationReport check_lemma_a(std::int64_t n, std::size_t order, std::optional<Perturbation> perturb = {});
VerificationReport check_lemma_b(std::int64_t n, std::size_t order, std::optional<Perturbation> perturb = {});

/// L1(n+1) - L1(n) = 0 and L2(n+1) - L2(n) = 2(-q)^{(n+1)^2}.
VerificationReport check_steps(std::int64_t n, std::size_t order, std::optional<Perturbation> perturb = {});

/// 2 (-1)^{(n+1)^2} q^{(n+1)^2}
TruncatedSeries l2_step_target(std::int64_t n, std::size_t order);

/// 1 + 8 sum (-q)^k/(1+q^k)^2 == H_N^{-4} modulo q^N.
VerificationReport check_limit_a(std::size_t order, std::optional<Perturbation> perturb = {});
/// sum (-q)^{k^2} == H_N^{-1} modulo q^N.
VerificationReport check_limit_b(std::size_t order, std::optional<Perturbation> perturb = {});
/// (sum q^{k^2})^4 == 1 + 8 sum q^k/(1+(-q)^k)^2 modulo q^N.
VerificationReport check_eq2(std::size_t order, std::optional<Perturbation> perturb = {});

/// Left side of the combined finite identity for a given n.
TruncatedSeries eq3_lhs(std::int64_t n, std::size_t order);
/// The combined finite identity, checked at the full order (it is exact).
VerificationReport check_eq3(std::int64_t n, std::size_t order, std::optional<Perturbation> perturb = {});
/// Modulo q^{n+1}: theta_partial(n)^4 equals theta_full^4 at -q, and eq3_lhs(n)
/// equals a_prime_lhs.
VerificationReport check_eq3_mod(std::int64_t n);

} // namespace foursq

#endif
