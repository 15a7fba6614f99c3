#include "uqcas/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace uqcas {

namespace {

using Mat = std::vector<std::vector<int>>;

Mat mat_identity(int n) {
    Mat m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    int n = static_cast<int>(a.size());
    Mat c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// Matrix of s_i: column j holds s_i(alpha_j).
Mat simple_matrix(const RootDatum& datum, int i) {
    int n = datum.rank();
    Mat m = mat_identity(n);
    for (int j = 0; j < n; ++j) m[i][j] -= datum.cartan(i, j);
    return m;
}

RootVec mat_apply(const Mat& m, const RootVec& v) {
    int n = static_cast<int>(m.size());
    RootVec out(n, 0);
    for (int j = 0; j < n; ++j) {
        if (v[j] == 0) continue;
        for (int i = 0; i < n; ++i) out[i] += m[i][j] * v[j];
    }
    return out;
}

bool is_negative(const RootVec& v) {
    for (int x : v)
        if (x < 0) return true;
    return false;
}

RootVec mat_column(const Mat& m, int j) {
    int n = static_cast<int>(m.size());
    RootVec col(n);
    for (int i = 0; i < n; ++i) col[i] = m[i][j];
    return col;
}

} // namespace

WeylElt::WeylElt(const RootDatum* datum)
    : datum_(datum),
      mat_(mat_identity(datum->rank())),
      inv_(mat_identity(datum->rank())) {}

WeylElt WeylElt::from_word(const RootDatum& datum, const std::vector<int>& word) {
    WeylElt w(&datum);
    for (int i : word) {
        if (i < 0 || i >= datum.rank())
            throw std::invalid_argument("WeylElt::from_word: letter out of range");
        Mat s = simple_matrix(datum, i);
        w.mat_ = mat_mul(w.mat_, s);
        w.inv_ = mat_mul(s, w.inv_);
    }
    w.recompute_word();
    return w;
}

WeylElt WeylElt::simple_reflection(const RootDatum& datum, int i) {
    return from_word(datum, {i});
}

WeylElt WeylElt::root_reflection(const RootDatum& datum, const RootVec& beta) {
    if (!datum.is_pos_root(beta))
        throw std::invalid_argument("WeylElt::root_reflection: not a positive root");
    int n = datum.rank();
    long bb = datum.bilin(beta, beta);
    Mat m = mat_identity(n);
    for (int j = 0; j < n; ++j) {
        RootVec ej(n, 0);
        ej[j] = 1;
        long pairing = 2 * datum.bilin(ej, beta);
        if (pairing % bb != 0)
            throw std::logic_error("WeylElt::root_reflection: non-integral pairing");
        long c = pairing / bb;
        for (int i = 0; i < n; ++i) m[i][j] -= static_cast<int>(c) * beta[i];
    }
    WeylElt w(&datum);
    w.mat_ = m;
    w.inv_ = m;
    w.recompute_word();
    return w;
}

// Greedy smallest left descent yields the lexicographically least reduced word.
void WeylElt::recompute_word() {
    word_.clear();
    int n = datum_->rank();
    Mat m = mat_, inv = inv_;
    for (;;) {
        int descent = -1;
        for (int i = 0; i < n; ++i) {
            if (is_negative(mat_column(inv, i))) { // w^{-1}(alpha_i) < 0
                descent = i;
                break;
            }
        }
        if (descent < 0) break;
        word_.push_back(descent);
        Mat s = simple_matrix(*datum_, descent);
        m = mat_mul(s, m);
        inv = mat_mul(inv, s);
    }
    if (m != mat_identity(n))
        throw std::logic_error("WeylElt::recompute_word: matrix is not a Weyl group element");
}

RootVec WeylElt::apply(const RootVec& v) const { return mat_apply(mat_, v); }
RootVec WeylElt::apply_inverse(const RootVec& v) const { return mat_apply(inv_, v); }

WeylElt WeylElt::operator*(const WeylElt& o) const {
    WeylElt w(datum_);
    w.mat_ = mat_mul(mat_, o.mat_);
    w.inv_ = mat_mul(o.inv_, inv_);
    w.recompute_word();
    return w;
}

WeylElt WeylElt::inverse() const {
    WeylElt w(datum_);
    w.mat_ = inv_;
    w.inv_ = mat_;
    w.recompute_word();
    return w;
}

std::vector<int> WeylElt::phi_plus() const {
    std::vector<int> out;
    for (int k = 0; k < datum_->num_pos_roots(); ++k)
        if (is_negative(apply_inverse(datum_->pos_root(k)))) out.push_back(k);
    return out;
}

bool WeylElt::has_left_descent(int i) const { return is_negative(mat_column(inv_, i)); }
bool WeylElt::has_right_descent(int i) const { return is_negative(mat_column(mat_, i)); }

std::optional<int> WeylElt::unique_ending() const {
    if (is_identity())
        throw std::invalid_argument("unique_ending: identity has no reduced expression letters");
    int found = -1;
    for (int i = 0; i < datum_->rank(); ++i) {
        if (has_right_descent(i)) {
            if (found >= 0) return std::nullopt;
            found = i;
        }
    }
    return found;
}

std::string WeylElt::to_string() const {
    if (word_.empty()) return "e";
    std::ostringstream os;
    for (size_t k = 0; k < word_.size(); ++k) {
        if (k) os << ' ';
        os << 's' << (word_[k] + 1);
    }
    return os.str();
}

WeylElt parse_weyl_word(const RootDatum& datum, const std::string& text) {
    std::vector<int> word;
    size_t p = 0;
    auto skip_ws = [&] {
        while (p < text.size() && (std::isspace(static_cast<unsigned char>(text[p])) || text[p] == '*'))
            ++p;
    };
    skip_ws();
    if (p < text.size() && (text[p] == 'e' || text[p] == '1') &&
        (p + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[p + 1])))) {
        return WeylElt(&datum);
    }
    while (p < text.size()) {
        skip_ws();
        if (p >= text.size()) break;
        if (text[p] != 's')
            throw std::invalid_argument("parse_weyl_word: expected 's' in '" + text + "'");
        ++p;
        size_t start = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (start == p)
            throw std::invalid_argument("parse_weyl_word: missing index in '" + text + "'");
        int idx = std::stoi(text.substr(start, p - start));
        if (idx < 1 || idx > datum.rank())
            throw std::invalid_argument("parse_weyl_word: index out of range in '" + text + "'");
        word.push_back(idx - 1);
    }
    return WeylElt::from_word(datum, word);
}

std::vector<WeylElt> all_weyl_elements(const RootDatum& datum) {
    int n = datum.rank();
    auto key_of = [&](const WeylElt& v) {
        Mat key(n, std::vector<int>(n));
        for (int c = 0; c < n; ++c) {
            RootVec col = v.apply(datum.simple(c));
            for (int r = 0; r < n; ++r) key[r][c] = col[r];
        }
        return key;
    };
    WeylElt id(&datum);
    std::vector<WeylElt> out{id};
    std::set<Mat> seen{key_of(id)};
    std::vector<WeylElt> frontier{id};
    while (!frontier.empty()) {
        std::vector<WeylElt> next;
        for (const WeylElt& w : frontier) {
            for (int i = 0; i < n; ++i) {
                if (w.has_right_descent(i)) continue;
                WeylElt v = w * WeylElt::simple_reflection(datum, i);
                if (seen.insert(key_of(v)).second) next.push_back(v);
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const WeylElt& a, const WeylElt& b) { return a.word() < b.word(); });
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

WeylElt longest_element(const RootDatum& datum) {
    WeylElt w(&datum);
    for (;;) {
        int ascent = -1;
        for (int i = 0; i < datum.rank(); ++i) {
            if (!w.has_right_descent(i)) {
                ascent = i;
                break;
            }
        }
        if (ascent < 0) return w;
        w = w * WeylElt::simple_reflection(datum, ascent);
    }
}

std::vector<std::vector<int>> valid_supports(const WeylElt& w) {
    const RootDatum& datum = w.datum();
    std::vector<int> candidates;
    for (int i = 0; i < datum.rank(); ++i)
        if (is_negative(w.apply_inverse(datum.simple(i)))) candidates.push_back(i);
    int m = static_cast<int>(candidates.size());
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> sub;
        for (int a = 0; a < m; ++a)
            if (mask & (1u << a)) sub.push_back(candidates[a]);
        bool ok = true;
        for (size_t a = 0; a < sub.size() && ok; ++a)
            for (size_t b = a + 1; b < sub.size() && ok; ++b)
                if (datum.bilin(datum.simple(sub[a]), datum.simple(sub[b])) != 0) ok = false;
        if (ok) out.push_back(sub);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool weak_leq(const WeylElt& v, const WeylElt& w) {
    return v.length() + (v.inverse() * w).length() == w.length();
}

} // namespace uqcas
