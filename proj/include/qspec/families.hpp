#ifndef QSPEC_FAMILIES_HPP
#define QSPEC_FAMILIES_HPP

#include <array>
#include <string>
#include <vector>

#include "qspec/graph.hpp"
#include "qspec/spectra.hpp"

namespace qspec {

// The three pendant-weighted extremal families with printed eigen-systems.
// G1(p,q): theta(2,2,2) base, p pendants at one hub, q at the other
//          (order p+q+5).
// G2(p,q): theta(1,2,3) base, p pendants at a hub, q pendants at the middle
//          of the length-3 path (order p+q+5).
// G4(p,q): two triangles joined by a length-2 path, p and q pendants at the
//          triangle-path junctions (order p+q+7).
enum class Family { G1, G2, G4 };

std::string family_name(Family f);

struct FamilyParams {
  Family family = Family::G1;
  int p = 0;
  int q = 0;

  int order() const { return p + q + (family == Family::G4 ? 7 : 5); }
};

// The complement graph assembled class by class from the eigen-equation
// system (vertex layout: v1 | p-class | middle classes | v6-analogue |
// q-class). Degrees are cross-checked against the system's diagonal.
Graph build_family_complement(const FamilyParams& params);

// The bicyclic graph itself: complement of the assembled graph.
// Requires order() >= 7.
Graph build_family(const FamilyParams& params);

// 7x7 divisor matrix of the equitable partition, with class sizes.
struct QuotientMatrix {
  std::array<std::array<long long, 7>, 7> m{};
  std::array<int, 7> class_sizes{};
};

QuotientMatrix quotient_matrix(const FamilyParams& params);

// det(xI - Q) by LU with partial pivoting.
double quotient_charpoly_at(const QuotientMatrix& qm, double x);

// Eigenvalues of the quotient via the diag(sqrt(sizes)) similarity, ascending.
// Requires every class nonempty (p, q >= 1).
std::vector<double> quotient_eigenvalues(const QuotientMatrix& qm);

// Coefficients of f_k(x; p, q), index = power of x. Exact.
std::array<__int128, 8> f_coeffs(Family f, long long p, long long q);

long double f_eval(Family f, long double x, int p, int q);
__int128 f_eval_exact(Family f, long long x, int p, int q);

// ---- printed auxiliary polynomials (transcribed verbatim) ----
long double g1_eval(long double x, int n, int q);   // quartic from Lemma 2.7
long double g2_eval(long double x, int p, int q);   // cubic from Lemma 2.9
long double g4_eval(long double x, int n);          // quartic from the theorem
long double g12_eval(long double x, int n);         // printed factored form
long double g14_eval(long double x, int n);         // (n-3-x) * g4(x)

enum class GPoly { G1Aux, G2Aux, G4Aux, G12, G14 };
// Dispatch. a/b are (n,q) for G1Aux, (p,q) for G2Aux, (n,unused) otherwise.
long double g_eval(GPoly which, long double x, int a, int b);

// ---- difference identities; exact at integer samples, long double at
//      fractional ones with relative tolerance 1e-8 ----
bool check_identity_27(int p, int q, int samples);  // requires q >= 1
bool check_identity_28(int n, int q, int samples);
bool check_identity_29(int p, int q, int samples);  // requires q >= 1

// ---- appendix claims ----
struct ClaimReport {
  bool positivity_ok = true;  // grid sweep of the polynomial on its interval
  bool chain_ok = true;       // derivative-chain endpoint signs
  std::vector<std::string> findings;  // printed-value mismatches, sign failures
  std::vector<std::string> notes;
  bool pass() const { return positivity_ok && chain_ok; }
};

ClaimReport check_claim_a(int p, int q, int grid);  // g1 on (0, min(q+1, p+2)]
ClaimReport check_claim_b(int p, int q, int grid);  // g2 on (0, q+3]
ClaimReport check_claim_c(int n, int grid);         // g4 on (0, 1]

// Least eigenpair of Q(G_k^c(p,q)).
EigenResult family_least_eigenpair(const FamilyParams& params);

}  // namespace qspec

#endif
