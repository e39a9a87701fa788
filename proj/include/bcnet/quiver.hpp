#pragma once

#include "bcnet/lie.hpp"
#include "bcnet/plabic.hpp"

#include <string>
#include <vector>

namespace bcnet {

using RMatrix = std::vector<std::vector<Rational>>;

/// Dual quiver on the faces; half-edges come from edges with a boundary endpoint.
struct Quiver {
    struct Arrow {
        int from, to;
        bool half;
    };
    int size = 0;
    std::vector<Arrow> arrows;
    RMatrix q; // skew, half-edges count 1/2
};

Quiver dual_quiver(const PlabicGraph& g);
/// Adjacency-matrix Y-mutation at k; arrows are rebuilt from the new matrix.
Quiver y_mutate(const Quiver& q, int k);

/// Log-canonical bracket {x_i, x_j} = c_ij x_i x_j on named coordinates.
struct BracketSpec {
    std::vector<std::string> names;
    RMatrix c;
    std::vector<Rational> relation; // exponents of the central monomial
    /// Per face: (coordinate or -1, factor); the face weight is factor * coordinate.
    std::vector<std::pair<int, Scalar>> face_terms;
};

BracketSpec log_canonical_bracket(const PlabicGraph& g);
/// Even valency: coordinates on faces on or above the midline.
BracketSpec folded_bracket(const PlabicGraph& g, const Rational& scale = Rational(1));
/// Odd valency: geometric means over faces above the midline.
BracketSpec averaged_bracket(const PlabicGraph& g);

bool is_skew(const RMatrix& m);
/// Bracket of the relation monomial with every coordinate vanishes.
bool relation_is_central(const BracketSpec& spec);

/// Coordinates of a weighting: face weights as expressions in the spec's variables.
FaceWeighting<Expr> coordinate_weighting(const PlabicGraph& g, const BracketSpec& spec);
/// Inverse of coordinate_weighting at a weighting in the spec's image.
Env coordinates_of(const PlabicGraph& g, const BracketSpec& spec, const FaceWeighting<Scalar>& fw);

struct PushforwardPoint {
    SMatrix a;            // Meas at the point
    std::vector<std::vector<std::vector<std::vector<Scalar>>>> lhs; // [i][j][k][l]
};

/// Pushes the spec's bracket through Meas at env; compares against std_bracket.
class Pushforward {
public:
    Pushforward(const PlabicGraph& g, const BracketSpec& spec);
    /// {A_ij, A_kl} via the chain rule at the point.
    PushforwardPoint at(const Env& env) const;
    /// Number of entry pairs where the pushforward differs from the standard bracket.
    int mismatches(const GroupContext& ctx, const Env& env) const;
    const EMatrix& entries() const { return entries_; }

private:
    BracketSpec spec_;
    EMatrix entries_;
};

std::string quiver_dot(const PlabicGraph& g, const Quiver& q);
std::string graph_dot(const PlabicGraph& g);

} // namespace bcnet
