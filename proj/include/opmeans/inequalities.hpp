#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "opmeans/functions.hpp"
#include "opmeans/loewner.hpp"
#include "opmeans/means.hpp"
#include "opmeans/positive_maps.hpp"

namespace opmeans {

// Each predicate below materializes the terms of a refinement chain and
// checks consecutive Loewner comparisons. Throughout, for a pair (A, B) and
// weights alpha, beta:
//
//   M = A nabla_alpha B,   X = M nabla_beta A,   Y = M nabla_beta B
//   G = A sharp_alpha B,   P = G sharp_beta A,   Q = G sharp_beta B
//
// and the identities A nabla_alpha B = X nabla_alpha Y and
// A sharp_alpha B = P sharp_alpha Q are what make the middle terms
// refinements.

enum class TheoremId { kT21, kC22, kR23, kC24, kR25, kT25, kC27, kR27, kT31, kE18, kT32, kR33 };

std::string_view to_string(TheoremId id);
// Accepts "T21", "C22", ... Throws ParseError.
TheoremId parse_theorem_id(std::string_view text);

// kBypass lets a predicate run with a function outside its hypothesis
// class. Only the sensitivity search and tests use it.
enum class Hypothesis { kEnforce, kBypass };

// f(M) <= f(X) sharp_alpha f(Y) <= f(A) sharp_alpha f(B), f operator
// monotone decreasing.
ChainReport t21_chain(const ScalarFunctionSpec& f, const PosDefMatrix& a, const PosDefMatrix& b,
                      Weight alpha, Weight beta, Hypothesis hyp = Hypothesis::kEnforce);

// The beta = 1 collapse of t21_chain: f(A nabla_alpha B) <= f(A) sharp_alpha f(B)
// (operator log-convexity). Failing it for some pair rules f out of the
// operator monotone decreasing class.
ChainReport r23_log_convexity(const ScalarFunctionSpec& f, const PosDefMatrix& a,
                              const PosDefMatrix& b, Weight alpha,
                              Hypothesis hyp = Hypothesis::kEnforce);

// f(A + B) <= f((3A + B)/2) sharp f((A + 3B)/2) <= f(2A) sharp f(2B)
//          <= f(2A) nabla f(2B) <= f(A) nabla f(B).
ChainReport c22_chain(const ScalarFunctionSpec& f, const PosDefMatrix& a, const PosDefMatrix& b,
                      Hypothesis hyp = Hypothesis::kEnforce);

// g(M) >= g(X) sharp_alpha g(Y) >= g(A) sharp_alpha g(B), g operator
// monotone increasing. Checked as the ascending chain of reversed terms.
ChainReport c24_chain(const ScalarFunctionSpec& g, const PosDefMatrix& a, const PosDefMatrix& b,
                      Weight alpha, Weight beta, Hypothesis hyp = Hypothesis::kEnforce);

// f(M) <= f(X) !_alpha f(Y) <= f(A) !_alpha f(B) <= f(A) sigma_alpha f(B).
// The unweighted comparison f(A) !_alpha f(B) <= f(A) sigma_{1/2} f(B) is
// recorded as an observation; it is only claimed at alpha = 1/2.
ChainReport r25_harmonic_chain(const ScalarFunctionSpec& f, const PosDefMatrix& a,
                               const PosDefMatrix& b, Weight alpha, Weight beta, PathSpec sigma,
                               Hypothesis hyp = Hypothesis::kEnforce);

// A !_alpha B <= P !_alpha Q <= A sharp_alpha B <= P nabla_alpha Q <= A nabla_alpha B.
ChainReport t25_amgh_chain(const PosDefMatrix& a, const PosDefMatrix& b, Weight alpha,
                           Weight beta);

// Scalar chain ||A + B|| <= ||alpha A + (1 - alpha) (A nabla B)||
// + ||alpha B + (1 - alpha) (A nabla B)|| <= ||A|| + ||B||. The second link
// is claimed only for alpha in [0, 1]; outside it becomes an observation.
ChainReport c27_triangle(const SymMatrix& a, const SymMatrix& b, UnrestrictedWeight alpha);

// Two scalar chains (terms 0..2 and 3..5):
//   ||A|| - ||B|| <= (||A nabla_{-alpha} 2B|| + ||A nabla_alpha 2B|| - 2||B||) / 2 <= ||A - B||
//   ||B|| - ||A|| <= (||B nabla_{-alpha} 2A|| + ||B nabla_alpha 2A|| - 2||A||) / 2 <= ||A - B||
// The right-hand links are claimed only for |alpha| <= 1; outside they
// become observations.
ChainReport r27_reverse_triangle(const SymMatrix& a, const SymMatrix& b, UnrestrictedWeight alpha);

// Phi(G) <= Phi(P) sharp_alpha Phi(Q) <= Phi(A) sharp_alpha Phi(B).
// Throws NotPositiveDefinite naming the map if an image is singular.
ChainReport t31_ando(const PositiveLinearMapSpec& phi, const PosDefMatrix& a,
                     const PosDefMatrix& b, Weight alpha, Weight beta);

// sum G_j <= (sum P_j) sharp_alpha (sum Q_j) <= (sum A_j) sharp_alpha (sum B_j).
ChainReport e18_sums(std::span<const PosDefMatrix> a_list, std::span<const PosDefMatrix> b_list,
                     Weight alpha, Weight beta);

// Block-diagonal embedding diag(A_1, ..., A_m); with block_sum(m, d) this
// turns e18_sums into an instance of t31_ando.
PosDefMatrix block_diagonal(std::span<const PosDefMatrix> blocks);

// With p = alpha (1 - beta) + beta ((1 - alpha) gamma + alpha delta):
// Phi(A s_p B) <= Phi((A s_alpha B) s_beta (A s_gamma B)) s_alpha
//                 Phi((A s_alpha B) s_beta (A s_delta B)) <= Phi(A) s_p Phi(B).
ChainReport r33_general(const PositiveLinearMapSpec& phi, const PosDefMatrix& a,
                        const PosDefMatrix& b, PathSpec path, Weight alpha, Weight beta,
                        Weight gamma, Weight delta);

// r33_general with gamma = 0 and delta = 1, where p reduces to alpha.
ChainReport t32_uhlmann(const PositiveLinearMapSpec& phi, const PosDefMatrix& a,
                        const PosDefMatrix& b, PathSpec path, Weight alpha, Weight beta);

// p = alpha (1 - beta) + beta ((1 - alpha) gamma + alpha delta), clamped.
Weight r33_weight(Weight alpha, Weight beta, Weight gamma, Weight delta);

// A fully specified theorem evaluation. Fields a theorem does not take
// must stay empty; make() validates the signature.
struct TheoremInstance {
  TheoremId id = TheoremId::kT25;
  std::optional<ScalarFunctionSpec> function;
  std::optional<PositiveLinearMapSpec> map;
  std::optional<PathSpec> path;
  std::vector<SymMatrix> a_list;  // one entry except for E18
  std::vector<SymMatrix> b_list;
  std::optional<double> alpha, beta, gamma, delta;
  Hypothesis hypothesis = Hypothesis::kEnforce;

  // Throws HypothesisError / DomainError / DimensionError when the fields
  // do not match the signature of `id`.
  void validate() const;
};

// Validates, then dispatches to the matching predicate.
ChainReport evaluate(const TheoremInstance& instance);

}  // namespace opmeans
