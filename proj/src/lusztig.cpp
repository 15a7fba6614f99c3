#include "uqcas/lusztig.hpp"

#include "uqcas/qnum.hpp"

#include <stdexcept>

namespace uqcas {

namespace {

AlgElt image_E(const UqAlgebra& U, int i, int j, bool inverse) {
    const RootDatum& dat = U.datum();
    if (j == i) {
        if (!inverse) return U.mul(U.F(i), U.Ki(i)) * RatFunc(-1); // -F_i K_i
        return U.mul(U.Ki(i, -1), U.F(i)) * RatFunc(-1);           // -K_i^-1 F_i
    }
    int r = -dat.cartan(i, j);
    long di = dat.sym_d(i);
    AlgElt acc;
    for (int s = 0; s <= r; ++s) {
        AlgElt term = inverse ? U.mul(U.divided_power_E(i, s),
                                      U.mul(U.E(j), U.divided_power_E(i, r - s)))
                              : U.mul(U.divided_power_E(i, r - s),
                                      U.mul(U.E(j), U.divided_power_E(i, s)));
        RatFunc c = RatFunc::q_power(-di * s);
        if (s % 2) c = -c;
        acc += term * c;
    }
    return acc;
}

AlgElt image_F(const UqAlgebra& U, int i, int j, bool inverse) {
    const RootDatum& dat = U.datum();
    if (j == i) {
        if (!inverse) return U.mul(U.Ki(i, -1), U.E(i)) * RatFunc(-1); // -K_i^-1 E_i
        return U.mul(U.E(i), U.Ki(i)) * RatFunc(-1);                   // -E_i K_i
    }
    int r = -dat.cartan(i, j);
    long di = dat.sym_d(i);
    AlgElt acc;
    for (int s = 0; s <= r; ++s) {
        AlgElt term = inverse ? U.mul(U.divided_power_F(i, r - s),
                                      U.mul(U.F(j), U.divided_power_F(i, s)))
                              : U.mul(U.divided_power_F(i, s),
                                      U.mul(U.F(j), U.divided_power_F(i, r - s)));
        RatFunc c = RatFunc::q_power(di * s);
        if (s % 2) c = -c;
        acc += term * c;
    }
    return acc;
}

AlgElt apply_T(const UqAlgebra& U, int i, const AlgElt& x, bool inverse) {
    const RootDatum& dat = U.datum();
    if (i < 0 || i >= dat.rank()) throw std::invalid_argument("lusztig_T: index out of range");
    std::vector<AlgElt> imgE(dat.rank()), imgF(dat.rank());
    std::vector<bool> haveE(dat.rank(), false), haveF(dat.rank(), false);
    AlgElt out;
    for (const auto& [m, c] : x.terms()) {
        AlgElt acc = U.one() * c;
        for (int l : m.fword) {
            if (!haveF[l]) {
                imgF[l] = image_F(U, i, l, inverse);
                haveF[l] = true;
            }
            acc = U.mul(acc, imgF[l]);
        }
        bool ktrivial = true;
        for (int v : m.kexp) ktrivial = ktrivial && v == 0;
        if (!ktrivial) {
            // T_i(K^mu) = K^{s_i mu} in lattice coordinates, for T and T^-1 alike
            RootVec mu(m.kexp.begin(), m.kexp.end());
            RootVec ref = dat.reflect_simple(i, mu);
            acc = U.mul(acc, U.K(std::vector<int>(ref.begin(), ref.end())));
        }
        for (int l : m.eword) {
            if (!haveE[l]) {
                imgE[l] = image_E(U, i, l, inverse);
                haveE[l] = true;
            }
            acc = U.mul(acc, imgE[l]);
        }
        out += acc;
    }
    return out;
}

} // namespace

AlgElt lusztig_T(const UqAlgebra& U, int i, const AlgElt& x) { return apply_T(U, i, x, false); }
AlgElt lusztig_T_inv(const UqAlgebra& U, int i, const AlgElt& x) { return apply_T(U, i, x, true); }

AlgElt lusztig_T_word(const UqAlgebra& U, const std::vector<int>& word, const AlgElt& x) {
    AlgElt acc = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = lusztig_T(U, *it, acc);
    return acc;
}

AlgElt lusztig_T_inv_word(const UqAlgebra& U, const std::vector<int>& word, const AlgElt& x) {
    AlgElt acc = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = lusztig_T_inv(U, *it, acc);
    return acc;
}

namespace {

void check_reduced(const UqAlgebra& U, const std::vector<int>& word) {
    WeylElt w = WeylElt::from_word(U.datum(), word);
    if (w.length() != static_cast<int>(word.size()))
        throw std::invalid_argument("root_vector: word is not reduced");
}

} // namespace

AlgElt root_vector_F(const UqAlgebra& U, const std::vector<int>& reduced_word, int k) {
    if (k < 1 || k > static_cast<int>(reduced_word.size()))
        throw std::invalid_argument("root_vector_F: position out of range");
    check_reduced(U, reduced_word);
    AlgElt x = U.F(reduced_word[k - 1]);
    for (int t = k - 2; t >= 0; --t) x = lusztig_T_inv(U, reduced_word[t], x);
    return x;
}

AlgElt root_vector_E(const UqAlgebra& U, const std::vector<int>& reduced_word, int k) {
    if (k < 1 || k > static_cast<int>(reduced_word.size()))
        throw std::invalid_argument("root_vector_E: position out of range");
    check_reduced(U, reduced_word);
    AlgElt x = U.E(reduced_word[k - 1]);
    for (int t = k - 2; t >= 0; --t) x = lusztig_T(U, reduced_word[t], x);
    return x;
}

} // namespace uqcas
