#pragma once

#include "uqcas/coideal.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace uqcas {

// Dense matrix over the rational function field, row major: m[r][c].
using DenseMat = std::vector<std::vector<RatFunc>>;

DenseMat dense_identity(int n);
DenseMat dense_zero(int rows, int cols);
DenseMat dense_mul(const DenseMat& a, const DenseMat& b);
std::vector<RatFunc> dense_apply(const DenseMat& a, const std::vector<RatFunc>& v);
// In-place reduced row echelon form; returns the pivot column of each
// surviving row.  Zero rows are removed.
std::vector<int> dense_rref(DenseMat& rows);
int dense_rank(DenseMat rows);

// Finite matrix model of a module: one action matrix per Chevalley generator,
// acting on column vectors over the basis named by `labels`.  A full module
// has no boundary flags and satisfies every defining relation exactly.  A
// window into an infinite module flags the basis vectors whose generator
// images were truncated; identities are only asserted on columns whose
// intermediate images stay clear of flagged positions.
struct ModuleWindow {
    const UqAlgebra* algebra = nullptr;
    std::string descriptor;
    std::vector<std::string> labels;
    std::vector<bool> boundary;
    std::vector<DenseMat> e_action, f_action, k_action, kinv_action;

    int dim() const { return static_cast<int>(labels.size()); }
    bool full() const;
};

// Action matrix of an arbitrary element: each canonical monomial
// F_w K^mu E_v acts as the matching product of generator matrices.
DenseMat module_action(const ModuleWindow& V, const AlgElt& x);

// Counts defining-relation entries that fail on the window: K-inverses and
// K-commutativity, the K-E and K-F commutation, [E_i, F_j], and both quantum
// Serre families.  Columns whose intermediate images touch a boundary flag
// are skipped, so a full module must return zero.
int relation_violations(const ModuleWindow& V);

// The (n+1)-dimensional simple module of type eps = +-1 over a rank-one
// datum, on the basis m_0..m_n:
//   K m_i = eps q^{n-2i} m_i,  F m_i = m_{i+1},  E m_i = eps [i][n+1-i] m_{i-1}.
ModuleWindow sl2_simple(const UqAlgebra& U, int n, int eps);

// Dimension of the simple module of the given dominant highest weight
// (fundamental-weight coordinates), by the Weyl dimension formula.
long weyl_dimension(const RootDatum& D, const std::vector<int>& weight);

// The simple highest-weight module L(weight) of type +1, constructed as the
// quotient of the Verma module by its maximal submodule.  The maximal
// submodule is accumulated slice by slice as the joint preimage of the lower
// slices under all E_i, purely by linear algebra over the PBW bases; the
// result is cross-checked against the Weyl dimension formula.  Throws
// std::invalid_argument when the dimension exceeds dim_cap.
ModuleWindow simple_module(const UqAlgebra& U, const std::vector<int>& weight,
                           int dim_cap = 30);

struct FactorChain {
    bool complete = false;
    int stage = -1;          // first stage without an invariant line
    std::string obstruction; // "higher-dimensional factor" or "inconclusive"
    // One row per one-dimensional factor: the eigenvalue of each generator.
    std::vector<std::vector<RatFunc>> factor_values;
};

// Greedy composition chain of a full module under the subalgebra generated by
// gens: find a line fixed by every generator, record the eigenvalues, pass to
// the quotient, repeat.  Lines are located exactly, through nilpotent kernels,
// triangular eigenvalue splits and low-dimensional eliminations; when a stage
// provably has no invariant line the report says "higher-dimensional factor",
// and when the search cannot decide it says "inconclusive".
FactorChain restrict_and_factor(const ModuleWindow& V, const std::vector<AlgElt>& gens);

// Character data for the module induced from the two-parameter rank-one
// coideal with the normalization lambda = 1: the generators with leading
// terms EK^-1 and F act on the inducing line by e and f, which must satisfy
// e f = lambda lambda' exactly.
struct InducedSpec {
    RatFunc e, f;
    RatFunc lambda, lambda_prime;
    int radius = 4;
};

// Validates the character constraint and fills in the normalization pair;
// throws std::invalid_argument when e f != lambda lambda' or radius < 1.
InducedSpec make_sl2_spec(const UqAlgebra& U, const RatFunc& e, const RatFunc& f,
                          int radius);

// Window of radius N into the induced module on the basis K^i 1, |i| <= N:
//   K   . K^i 1 = K^{i+1} 1
//   F   . K^i 1 = q^{2i} f K^i 1 - q^{2i} lambda' K^{i-1} 1
//   E   . K^i 1 = q^{-2i-2} e K^{i+1} 1 - q^{-2i-2} lambda K^i 1
// The two edge vectors are boundary-flagged.
ModuleWindow induced_sl2(const UqAlgebra& U, const InducedSpec& spec);

// Decides whether the induced module has a nontrivial proper submodule: one
// exists exactly when e = eps q^n lambda for some n >= 0 and eps = +-1 (the
// submodule then has codimension n+1).  Returns (n, eps), or nullopt when the
// module is irreducible.
std::optional<std::pair<int, int>> sl2_submodule_test(const UqAlgebra& U,
                                                      const InducedSpec& spec);

struct QuotientHom {
    DenseMat phi;        // rows over the target basis, columns over the window
    ModuleWindow target; // the simple quotient the window surjects onto
    int inconsistencies; // always 0 on return; failures throw instead
};

// Constructs the surjection from the induced window onto sl2_simple(n, eps):
// the coefficient functionals satisfy phi_k(K^i 1) = eps^i q^{(n-2k)i}
// phi_k(1) with every phi_k(1) != 0, determined by the downward recurrence
// phi_{k-1}(1) = (f - eps q^{-(n-2k)} lambda') phi_k(1).  Every window entry
// of both coefficient recurrences is re-verified, as is the intertwiner
// property of the assembled matrix on interior columns; any mismatch throws
// std::logic_error, since it would falsify the quotient construction.
QuotientHom sl2_quotient_hom(const UqAlgebra& U, const InducedSpec& spec, int n, int eps);

// The two non-homogeneous Borel families of the rank-two type A algebra:
// Type1 induces from the coideal with lower part on s1 and full upper part,
// window basis F2^i F12^j K2^k; Type2 from the coideal with both parts on
// s1 s2, window basis F2^i E2^j K2^k.
enum class Sl3Borel { Type1, Type2 };

struct Sl3Window {
    ModuleWindow window;
    std::vector<std::array<int, 3>> index; // (i, j, k) per basis position
    int radius = 0;

    int position(int i, int j, int k) const; // -1 when outside the window
};

// Window of the module induced from the one-dimensional character
// (e1, f1, k122) of the chosen Borel family, with e1 f1 = lambda lambda' and
// k122 != 0.  Generator actions are computed by multiplying in the ambient
// algebra and projecting onto the coset basis through the factored PBW basis
// (window part times coideal part), peeling one total-height slice at a time;
// contributions leaving the window raise the source boundary flag.
Sl3Window induced_sl3(const UqAlgebra& U, Sl3Borel family, const RatFunc& e1,
                      const RatFunc& f1, const RatFunc& k122, int radius);

struct CharacterSearch {
    std::vector<RatFunc> values; // eigenvalue per generator on the line found
};

// Character of a one-dimensional submodule of V under the listed generators,
// located by the invariant-line search of restrict_and_factor.  Throws
// std::domain_error when no line exists (or none can be certified).
CharacterSearch quotient_character_search(const ModuleWindow& V,
                                          const std::vector<AlgElt>& gens);

struct Sl2CharacterSearch {
    RatFunc e, f;        // character read off the invariant line
    int n = 0;           // parameters recovered by sl2_submodule_test
    int eps = 1;
    int inconsistencies = 0; // recurrence mismatches in the verified surjection
};

// Round trip for the rank-one quotient story: restrict sl2_simple(n, eps) to
// the normalized two-parameter coideal, read the character of its invariant
// line, confirm the submodule test recovers (n, eps), and rebuild the
// surjection from the induced window of the given radius.
Sl2CharacterSearch sl2_quotient_character(const UqAlgebra& U, int n, int eps,
                                          int radius);

} // namespace uqcas
