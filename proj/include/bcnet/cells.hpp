#pragma once

#include "bcnet/lie.hpp"
#include "bcnet/plabic.hpp"
#include "bcnet/weyl.hpp"

#include <vector>

namespace bcnet {

/// Elementary graph of a letter in one unit-width column, rows 1..n at heights 1..n.
/// Type A contexts give the single bridge on rows (i, i+1).
PlabicGraph gamma_graph(const GroupContext& ctx, int letter);
/// Concatenation of gamma_graph over the word; straight wires for the empty word.
/// B and C words must be reduced (NotReduced); type A words are taken as they are.
PlabicGraph gamma_word(const GroupContext& ctx, const DoubleWord& dw);

/// The perfectly oriented network of gamma_graph with parameter t on its vertical edges.
template <class T>
Network<T> psi(const GroupContext& ctx, int letter, const T& t);
/// Straight wires weighted by the torus element diag(h), bottom-up.
template <class T>
Network<T> psi0(const GroupContext& ctx, const std::vector<T>& h);
/// psi0(h) psi(i_1, t_1) ... psi(i_m, t_m).
template <class T>
Network<T> psi_word(const GroupContext& ctx, const DoubleWord& dw, const std::vector<T>& h, const std::vector<T>& ts);

/// diag(h) X_{i_1}(t_1) ... X_{i_m}(t_m).
template <class T>
Matrix<T> phi(const GroupContext& ctx, const DoubleWord& dw, const std::vector<T>& h, const std::vector<T>& ts);

/// Torus of the context: h_j h_{n+1-j} = 1 outside type A.
bool in_torus(const GroupContext& ctx, const std::vector<Scalar>& h);

struct FgValue {
    SMatrix m;
    bool projective = false; // true when a half-integral coweight was rescaled
};

/// Y_1 ... Y_k X_{i_1} Y_{|i_1|} ... X_{i_m} Y_{|i_m|}: the first k parameters feed the leading Y's,
/// then one per letter. Y_i(t) = exp(H^i log t); half-integral coweights are shifted by 1/2.
FgValue fg_chart(const GroupContext& ctx, const DoubleWord& dw, const std::vector<Scalar>& params);
/// Number of FG parameters, m + k.
int fg_parameter_count(const GroupContext& ctx, const DoubleWord& dw);

/// Face carrying FG parameter p of gamma_word(dw): the strip between rows n-i and n+1-i,
/// between consecutive occurrences of +-i.
int fg_face(const PlabicGraph& g, const GroupContext& ctx, const DoubleWord& dw, int p);
/// Type C: face weights on or above the midline. Type B: signed geometric means y_f sqrt(c_f),
/// whose squares are y_f y_f'. Throws NotMoveSymmetricWeighting.
std::vector<Scalar> fg_from_faces(const GroupContext& ctx, const DoubleWord& dw, const FaceWeighting<Scalar>& fw);

} // namespace bcnet
