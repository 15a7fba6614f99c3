#pragma once

#include <string>
#include <vector>

namespace uqcas {

enum class LieType { A, B, C, D, G2 };

using RootVec = std::vector<int>; // coordinates in the simple-root basis

// Finite root datum of type A/B/C/D (any rank where the type exists) or G2.
// Numbering follows the source conventions used throughout this project:
//   A_n : path 1-2-...-n
//   B_n : path 1-2-...-n with alpha_1 the unique short simple root
//   C_n : path 1-2-...-n with alpha_1 the unique long simple root
//   D_n : legs alpha_1, alpha_2 attached to alpha_3, then chain 3-4-...-n
//   G2  : alpha_1 short, alpha_2 long
class RootDatum {
public:
    static RootDatum create(LieType type, int rank);
    static RootDatum from_name(const std::string& name); // "A3", "B2", "G2", ...

    LieType type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const;

    int cartan(int i, int j) const { return cartan_[i][j]; }
    int sym_d(int i) const { return d_[i]; }
    // Bilinear form (a, b) with (alpha_i, alpha_i) = 2 d_i.
    int bilin(const RootVec& a, const RootVec& b) const;
    // Pairing <b, alpha_i^vee> = 2(b, alpha_i)/(alpha_i, alpha_i).
    int pair_covee(const RootVec& b, int i) const;

    int num_pos_roots() const { return static_cast<int>(pos_roots_.size()); }
    const std::vector<RootVec>& pos_roots() const { return pos_roots_; }
    const RootVec& pos_root(int k) const { return pos_roots_[k]; }
    // Index of v in the positive-root list, or -1.
    int pos_root_index(const RootVec& v) const;
    bool is_pos_root(const RootVec& v) const { return pos_root_index(v) >= 0; }
    int height(const RootVec& v) const;
    int highest_root_index() const;

    RootVec simple(int i) const;
    bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

    // s_i acting on a root-lattice vector.
    RootVec reflect_simple(int i, const RootVec& v) const;
    // Reflection in an arbitrary root beta (must be a root).
    RootVec reflect_root(const RootVec& beta, const RootVec& v) const;

    // Sum of the simple roots strictly between i and j on the Dynkin path.
    // empty_path is set (and the zero vector returned) when i, j are adjacent.
    RootVec rho_path(int i, int j, bool* empty_path = nullptr) const;

    // Number of multisets of positive roots summing to nu.
    long kostant_dim(const RootVec& nu) const;

private:
    LieType type_ = LieType::A;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> d_;
    std::vector<RootVec> pos_roots_;
    void build_roots();
};

std::string root_to_string(const RootVec& v);

} // namespace uqcas
