#include "uqcas/rootdatum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace uqcas {

RootDatum RootDatum::create(LieType type, int rank) {
    RootDatum rd;
    rd.type_ = type;
    rd.rank_ = rank;
    int n = rank;
    auto require = [&](bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(msg);
    };
    switch (type) {
    case LieType::A: require(n >= 1, "type A needs rank >= 1"); break;
    case LieType::B: require(n >= 2, "type B needs rank >= 2"); break;
    case LieType::C: require(n >= 2, "type C needs rank >= 2"); break;
    case LieType::D: require(n >= 4, "type D needs rank >= 4"); break;
    case LieType::G2:
        require(n == 2, "type G2 has rank 2");
        break;
    }
    rd.d_.assign(n, 1);
    std::vector<std::pair<int, int>> edges; // Dynkin edges, unordered pairs
    if (type == LieType::D) {
        edges.push_back({0, 2});
        edges.push_back({1, 2});
        for (int i = 2; i + 1 < n; ++i) edges.push_back({i, i + 1});
    } else {
        for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    }
    if (type == LieType::B) {
        for (int i = 1; i < n; ++i) rd.d_[i] = 2;
    } else if (type == LieType::C) {
        rd.d_[0] = 2;
    } else if (type == LieType::G2) {
        rd.d_[1] = 3;
    }
    // (alpha_i, alpha_j) = -lcm(d_i, d_j) on Dynkin edges, 2 d_i on the diagonal.
    std::vector<std::vector<int>> bil(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) bil[i][i] = 2 * rd.d_[i];
    for (auto [i, j] : edges) bil[i][j] = bil[j][i] = -std::lcm(rd.d_[i], rd.d_[j]);
    rd.cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if ((bil[i][j] * 2) % (2 * rd.d_[i]) != 0)
                throw std::logic_error("non-integral Cartan entry");
            rd.cartan_[i][j] = bil[i][j] / rd.d_[i];
        }
    rd.build_roots();
    return rd;
}

RootDatum RootDatum::from_name(const std::string& name) {
    if (name.size() < 2) throw std::invalid_argument("bad datum name: " + name);
    char t = name[0];
    int rank = std::stoi(name.substr(1));
    switch (t) {
    case 'A': return create(LieType::A, rank);
    case 'B': return create(LieType::B, rank);
    case 'C': return create(LieType::C, rank);
    case 'D': return create(LieType::D, rank);
    case 'G': return create(LieType::G2, rank);
    default: throw std::invalid_argument("bad datum name: " + name);
    }
}

std::string RootDatum::name() const {
    static const char* letters = "ABCDG";
    std::ostringstream os;
    os << letters[static_cast<int>(type_)] << rank_;
    return os.str();
}

int RootDatum::bilin(const RootVec& a, const RootVec& b) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            if (b[j] != 0) s += a[i] * b[j] * d_[i] * cartan_[i][j];
    }
    return s;
}

int RootDatum::pair_covee(const RootVec& b, int i) const {
    int s = 0;
    for (int j = 0; j < rank_; ++j)
        if (b[j] != 0) s += b[j] * cartan_[i][j];
    return s;
}

RootVec RootDatum::simple(int i) const {
    RootVec v(rank_, 0);
    v[i] = 1;
    return v;
}

RootVec RootDatum::reflect_simple(int i, const RootVec& v) const {
    RootVec r = v;
    r[i] -= pair_covee(v, i);
    return r;
}

RootVec RootDatum::reflect_root(const RootVec& beta, const RootVec& v) const {
    int bb = bilin(beta, beta);
    int num = 2 * bilin(v, beta);
    if (num % bb != 0) throw std::logic_error("reflect_root: non-integral pairing");
    int c = num / bb;
    RootVec r = v;
    for (int i = 0; i < rank_; ++i) r[i] -= c * beta[i];
    return r;
}

void RootDatum::build_roots() {
    std::set<RootVec> all;
    std::queue<RootVec> work;
    for (int i = 0; i < rank_; ++i) {
        all.insert(simple(i));
        work.push(simple(i));
    }
    while (!work.empty()) {
        RootVec v = work.front();
        work.pop();
        for (int i = 0; i < rank_; ++i) {
            RootVec r = reflect_simple(i, v);
            if (all.insert(r).second) work.push(r);
        }
    }
    pos_roots_.clear();
    for (const auto& v : all) {
        bool pos = true;
        for (int x : v)
            if (x < 0) pos = false;
        if (pos) pos_roots_.push_back(v);
    }
    std::sort(pos_roots_.begin(), pos_roots_.end(), [&](const RootVec& a, const RootVec& b) {
        int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
}

int RootDatum::pos_root_index(const RootVec& v) const {
    for (int k = 0; k < num_pos_roots(); ++k)
        if (pos_roots_[k] == v) return k;
    return -1;
}

int RootDatum::height(const RootVec& v) const {
    return std::accumulate(v.begin(), v.end(), 0);
}

int RootDatum::highest_root_index() const {
    return num_pos_roots() - 1;
}

RootVec RootDatum::rho_path(int i, int j, bool* empty_path) const {
    if (i == j) throw std::invalid_argument("rho_path: indices must differ");
    // BFS on the Dynkin diagram; it is a tree, so the path is unique.
    std::vector<int> prev(rank_, -1);
    std::queue<int> work;
    work.push(i);
    prev[i] = i;
    while (!work.empty()) {
        int v = work.front();
        work.pop();
        if (v == j) break;
        for (int u = 0; u < rank_; ++u)
            if (adjacent(v, u) && prev[u] < 0) {
                prev[u] = v;
                work.push(u);
            }
    }
    if (prev[j] < 0) throw std::invalid_argument("rho_path: diagram not connected");
    RootVec rho(rank_, 0);
    bool empty = true;
    for (int v = prev[j]; v != i; v = prev[v]) {
        rho[v] += 1;
        empty = false;
    }
    if (empty_path) *empty_path = empty;
    return rho;
}

long RootDatum::kostant_dim(const RootVec& nu) const {
    for (int x : nu)
        if (x < 0) throw std::invalid_argument("kostant_dim: vector outside nonnegative cone");
    // Count multisets of positive roots summing to nu by one root at a time.
    std::map<RootVec, long> table;
    table[RootVec(rank_, 0)] = 1;
    for (const auto& beta : pos_roots_) {
        std::map<RootVec, long> next;
        for (const auto& [v, cnt] : table) {
            RootVec w = v;
            while (true) {
                bool ok = true;
                for (int i = 0; i < rank_; ++i)
                    if (w[i] > nu[i]) ok = false;
                if (!ok) break;
                next[w] += cnt;
                for (int i = 0; i < rank_; ++i) w[i] += beta[i];
            }
        }
        table = std::move(next);
    }
    auto it = table.find(nu);
    return it == table.end() ? 0 : it->second;
}

std::string root_to_string(const RootVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

} // namespace uqcas
