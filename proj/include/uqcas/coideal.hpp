#pragma once

#include "uqcas/hopf.hpp"
#include "uqcas/lusztig.hpp"
#include "uqcas/weyl.hpp"

#include <functional>
#include <optional>
#include <string>

namespace uqcas {

// Which one-sided PBW space a computation runs over: the lower triangular
// part spanned by ordered monomials in the root vectors F_{beta_k}, or the
// antipode-side space spanned by ordered monomials in E_{beta_k}K_{beta_k}^-1.
enum class Side { FMinus, EPlusAntipode };

// Ordered-monomial calculator for the side of a fixed Weyl element: root
// vectors, exponent enumeration per degree, cached monomial products, and
// membership/coordinates of elements in a degree slice.
class PbwSpan {
public:
    PbwSpan(const UqAlgebra& U, const WeylElt& w, Side side);

    const UqAlgebra& algebra() const { return *U_; }
    const WeylElt& w() const { return w_; }
    Side side() const { return side_; }
    int size() const { return static_cast<int>(roots_.size()); }
    const RootVec& root(int k) const { return roots_[k]; }
    const AlgElt& generator(int k) const { return gens_[k]; }

    // Exponent vectors a with sum a_k root_k = nu, lexicographic order.
    const std::vector<std::vector<int>>& exponents(const RootVec& nu) const;
    // g_0^{a_0} ... g_{l-1}^{a_{l-1}}, memoized through prefix products.
    const AlgElt& monomial(const std::vector<int>& a) const;

    // Coordinates of a degree-homogeneous element over the slice monomials,
    // as (exponent vector, coefficient) pairs; nullopt when outside the span.
    std::optional<std::vector<std::pair<std::vector<int>, RatFunc>>> coordinates(
        const AlgElt& x) const;
    // Membership test; splits inhomogeneous elements into degree components.
    bool contains(const AlgElt& x) const;

private:
    struct Slice {
        std::vector<std::vector<int>> exps;
        std::map<Mono, int> cols;
        SpanSolver solver;
    };
    const UqAlgebra* U_;
    WeylElt w_;
    Side side_;
    std::vector<RootVec> roots_;
    std::vector<AlgElt> gens_;
    mutable std::map<RootVec, std::vector<std::vector<int>>> exp_cache_;
    mutable std::map<std::vector<int>, AlgElt> mono_cache_;
    mutable std::map<RootVec, Slice> slice_cache_;

    std::optional<RootVec> slice_degree(const AlgElt& x) const;
    Slice& slice(const RootVec& nu) const;
    SparseRow to_row(const AlgElt& x, std::map<Mono, int>& cols) const;
};

// A multiplicative character of the chosen side: nonzero only on the root
// vectors attached to a set of pairwise orthogonal roots of Phi^+(w).
struct Character {
    WeylElt w;
    std::vector<RootVec> support;
    std::vector<RatFunc> values;

    static Character trivial(const WeylElt& w);
    // All support values 1 (the normalization every sweep uses).
    static Character normalized(const WeylElt& w, const std::vector<RootVec>& support);
    static Character with_values(const WeylElt& w, const std::vector<RootVec>& support,
                                 const std::vector<RatFunc>& values);
    // Support given by simple-root indices.
    static Character on_simples(const WeylElt& w, const std::vector<int>& simples);

    RatFunc value_of(const RootVec& beta) const;
};

// Character-shift engine: extends the character multiplicatively over the
// PBW basis and applies (phi x id) to coproducts.  Construction validates
// that the requested values are consistent with the straightening relations
// of the side (throws std::domain_error when no such character exists).
class ShiftContext {
public:
    ShiftContext(const UqAlgebra& U, const Character& phi, Side side);

    const UqAlgebra& algebra() const { return *U_; }
    const Character& character() const { return phi_; }
    const PbwSpan& span() const { return span_; }

    // Multiplicative extension evaluated on an element of the base space.
    RatFunc phi_hat(const AlgElt& x) const;
    // (phi x id) applied to the coproduct of x.
    AlgElt shift(const AlgElt& x) const;
    const AlgElt& shifted_generator(int k) const;

private:
    const UqAlgebra* U_;
    Character phi_;
    PbwSpan span_;
    std::vector<RatFunc> gen_values_;
    mutable std::vector<std::optional<AlgElt>> shifted_gens_;
    void validate_support();
};

// One-shot shifts of an element of U^-[phi.w] resp. of the antipode-side
// space of phi.w.
AlgElt character_shift(const UqAlgebra& U, const Character& phi, const AlgElt& x);
AlgElt character_shift_plus(const UqAlgebra& U, const Character& phi, const AlgElt& x);

// True when the normalized character on the given support extends to an
// algebra map of the chosen side, i.e. the straightening relations do not
// force any support value to vanish.
bool character_supportable(const UqAlgebra& U, const WeylElt& w,
                           const std::vector<RootVec>& support, Side side);

// The two-parameter sl2 coideal normalization: lambda = 1 and lambda' fixed
// by lambda*lambda' = q^2 / ((1-q^2)(q-q^-1)) for the simple root alpha_i.
RatFunc sl2_lambda();
RatFunc sl2_lambda_prime(const UqAlgebra& U, int i);

// Generators of a triangular coideal: shifted F root vectors for w_minus,
// K^{+-mu} for each lattice vector, shifted E_beta K_beta^-1 for w_plus.
struct BorelData {
    WeylElt w_minus;
    Character phi_minus;
    std::vector<RootVec> lattice;
    std::optional<WeylElt> w_plus;
    std::optional<Character> phi_plus;

    explicit BorelData(const WeylElt& wm)
        : w_minus(wm), phi_minus(Character::trivial(wm)) {}
};

struct CoidealPresentation {
    std::vector<AlgElt> generators;
    std::vector<std::string> labels;
};

CoidealPresentation build_presentation(const UqAlgebra& U, const BorelData& data);

enum class CoidealVerdict { Yes, No, Unknown };

struct CoidealCheck {
    CoidealVerdict verdict = CoidealVerdict::Unknown;
    std::string detail;
};

// Right-coideal test for the algebra generated by the presentation: verifies
// that every left coproduct factor of every generator lies in the generated
// span grown for `rounds` multiplication rounds.  Definitive No is reported
// when a pointedness argument bounds the reachable degree slice exactly.
CoidealCheck verify_coideal(const UqAlgebra& U, const CoidealPresentation& pres,
                            int rounds = 4);

// The Weyl element obtained by multiplying w on the left by the reflections
// in all support roots (orthogonal, so the order is immaterial).
WeylElt reflected_quotient(const WeylElt& w, const std::vector<RootVec>& support);

struct GradedOptions {
    int extra_height = 0;
    int extra_budget = 0;
    bool compute_hilbert = true;
    int attempt = 0;
};

struct GradedReport {
    WeylElt w;
    std::vector<RootVec> support;
    WeylElt w_prime;           // detected from the leading-term algebra
    WeylElt w_prime_predicted; // reflected_quotient(w, support)
    std::vector<RootVec> semigroup_gens;
    int group_rank = 0;
    std::vector<RootVec> detected_roots;
    bool growth_ok = false;
    bool hilbert_checked = false;
    bool hilbert_ok = false;
    int window_height = 0;
    int budget = 0;
    std::string verdict; // "match" or "mismatch"

    GradedReport(const WeylElt& w_, const WeylElt& det, const WeylElt& pred)
        : w(w_), w_prime(det), w_prime_predicted(pred) {}
};

// Leading-term analysis of the shifted algebra of phi: detects the Weyl
// element whose one-sided space matches the graded algebra after localizing
// at the detected K-semigroup, plus the growth and Hilbert-slice checks.
GradedReport graded_algebra(const UqAlgebra& U, const Character& phi,
                            const GradedOptions& opt = GradedOptions());

struct GrowthCheck {
    bool length_ok = false;
    long length = 0;
    long rank = 0;
    long quotient_length = 0;
};

// The integer identity l(w) = rank + l(w') re-derived from a report.
GrowthCheck growth_identity_check(const GradedReport& report);

struct Criterion2Result {
    bool applicable = false;
    int descent_i = -1;
    int descent_l = -1;
};

// Two distinct right descents i, l of w whose lifted roots -w(alpha_i),
// -w(alpha_l) avoid the support.
Criterion2Result criterion2_applicable(const WeylElt& w,
                                       const std::vector<RootVec>& support);

enum class ShiftFormulaOutcome { Holds, Fails, NotApplicable };

// Closed-form check for the shift of T_m^-1 T_{v^-1}^-1 (F_i) by a character
// supported on the simple root alpha_m: applicable when l(v s_i) = l(v) + 1,
// l(s_m v s_i) = l(v) + 2, (alpha_m, v(alpha_i)) = -1, and alpha_m has
// multiplicity zero in v(alpha_i).
ShiftFormulaOutcome shift_formula_check(const UqAlgebra& U, const WeylElt& v, int i,
                                        int m, const RatFunc& phi_value = RatFunc(1));

struct SweepOptions {
    int jobs = 1;
    bool include_empty_support = false;
    std::function<void(int done, int total)> progress;
};

struct SweepCase {
    GradedReport report;
    std::vector<int> support_simples;

    SweepCase(const GradedReport& r, std::vector<int> s)
        : report(r), support_simples(std::move(s)) {}
};

// graded_algebra over every Weyl element and every valid support of simple
// roots; deterministic order (length, canonical word, support).
std::vector<SweepCase> graded_sweep(const UqAlgebra& U, const SweepOptions& opt);

struct BorelCandidate {
    WeylElt w_minus;
    WeylElt w_plus;
    WeylElt w_minus_prime;
    std::vector<RootVec> support;
    std::vector<RootVec> lattice;
    std::string family; // "homogeneous", "sl2-pair", "other"

    BorelCandidate(const WeylElt& wm, const WeylElt& wp, const WeylElt& wmp)
        : w_minus(wm), w_plus(wp), w_minus_prime(wmp) {}
};

// Enumerates triangular Borel candidates (w_minus, w_plus, support): support
// pairwise orthogonal inside Phi^+(w_minus) and Phi^+(w_plus), supportable on
// both sides, with w_minus'^-1 w_plus = w_0 at additive lengths.
std::vector<BorelCandidate> borel_candidates(const UqAlgebra& U);

struct WitnessReport {
    std::string outcome; // "witness", "no-witness", "inconclusive"
    std::string detail;
    std::optional<RootVec> mu;
    std::vector<int> module_weight; // fundamental-weight coordinates
};

// Non-basicness probe: looks for a common root mu of Phi^+(w_plus) and
// Phi^+(w_minus'), builds the two shifted elements with leading terms
// E_mu K_mu^-1 and F_mu, and tests whether their commutator acts nilpotently
// on the listed simple modules.
WitnessReport nonbasic_witness(const UqAlgebra& U, const BorelData& data,
                               const std::vector<std::vector<int>>& weights,
                               int dim_cap = 30);

} // namespace uqcas
