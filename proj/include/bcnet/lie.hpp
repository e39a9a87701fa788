#pragma once

#include "bcnet/matrix.hpp"

#include <string>
#include <vector>

namespace bcnet {

enum class GroupType { A, B, C };

/// GL_n, or the group preserving Omega_n realized as B_k (n = 2k+1) or C_k (n = 2k).
struct GroupContext {
    GroupType type = GroupType::A;
    int n = 0;
    int k = 0;

    static GroupContext gl(int n);
    static GroupContext make(GroupType t, int rank);
    static GroupContext for_valency(int n); // B for odd n, C for even n
    std::string name() const;
};

/// Sum of (-1)^(i+1) E_{i,n+1-i}.
SMatrix omega_form(int n);
/// Alternating +-1 diagonal.
SMatrix d_form(int n);
/// Order-reversing permutation matrix.
SMatrix w0_form(int n);

SMatrix tau(const SMatrix& a); // throws Singular
bool in_group(const SMatrix& a);

/// Chevalley generator E_i for i > 0, F_{-i} = E_{-i}^t for i < 0.
SMatrix chevalley(const GroupContext& ctx, int letter);
/// exp(t E_letter); all generators here have cube zero.
template <class T>
Matrix<T> x_elem(const GroupContext& ctx, int letter, const T& t);

/// Diagonal of the fundamental coweight H^i, entries in {0, +-1/2, +-1}.
std::vector<Rational> coweight(const GroupContext& ctx, int i);
/// Y_i(u^2) = exp(H^i log u^2); exact for every nonzero u.
template <class T>
Matrix<T> y_cochar(const GroupContext& ctx, int i, const T& u);

/// Standard bracket of f_1 = Tr(m1 g) and f_2 = Tr(m2 g) at g.
Scalar std_bracket_linear(const GroupContext& ctx, const SMatrix& g, const SMatrix& m1, const SMatrix& m2);
/// {a_ij, a_kl} at g, 0-based indices.
Scalar std_bracket(const GroupContext& ctx, const SMatrix& g, std::pair<int, int> ij, std::pair<int, int> kl);

/// {f1,f2}(AB) against the sum of the brackets in A and in B, for all coordinate pairs.
bool multiplicativity_check(const GroupContext& ctx, const SMatrix& a, const SMatrix& b);

} // namespace bcnet
