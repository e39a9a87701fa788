#pragma once

#include "bcnet/lie.hpp"
#include "bcnet/weyl.hpp"

#include <tuple>
#include <vector>

namespace bcnet {

/// Every minor >= 0; exhaustive over row and column subsets.
bool is_tnn(const SMatrix& a);

/// A = L D U with L, U unitriangular. Throws ZeroLeadingMinor.
std::tuple<SMatrix, SMatrix, SMatrix> ldu(const SMatrix& a);

/// Type-A parameters of one factor A_j: case 1 (t, t'), case 2 (t), case 3 (t, t', t'').
std::vector<Scalar> tau_elementary(int case_no, const std::vector<Scalar>& params);
/// The product A_j of elementary factors (I + t E_{a,a+1}) for a case at index i.
SMatrix case_matrix(int n, int case_no, int i, const std::vector<Scalar>& params);

struct CertFactor {
    int letter = 0;            // 0 for the torus factor
    Scalar t;                  // parameter of X_letter(t)
    std::vector<Scalar> torus; // diagonal when letter == 0
    int case_no = 0;           // 1, 2 or 3 for letters
    std::vector<Scalar> type_a; // the factor's parameters along its type-A expansion
};

struct TNNCertificate {
    std::vector<CertFactor> factors;
    SMatrix product(const GroupContext& ctx) const;
};

/// The transposition (a a+1) in S_n.
Perm swap_perm(int n, int a);

/// Upper unitriangular U: the permutation w with U in B_- w B_-, read off northeast corner ranks.
Perm bruhat_datum(const SMatrix& u);

/// Factorization of a TNN element of G(Omega_n) into a positive torus element and X_i(t), t > 0.
/// Throws NotInGroup, NotTNN, ZeroLeadingMinor, ExtractionFailed.
TNNCertificate tnn_membership(const GroupContext& ctx, const SMatrix& a);

} // namespace bcnet
