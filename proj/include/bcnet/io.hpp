#pragma once

#include "bcnet/matrix.hpp"
#include "bcnet/plabic.hpp"

#include <optional>
#include <string>

namespace bcnet {

/// A graph file: the embedding plus whatever weights it carries.
struct GraphDoc {
    PlabicGraph graph;
    std::optional<Orientation> orient;           // every edge had "dir"
    std::optional<std::vector<Scalar>> weights;  // some edge had "w"; missing ones are 1
    std::optional<FaceWeighting<Scalar>> faces;  // "face_weights"
};

/// Throws BadJson (and BadLiteral from coordinates or weights).
GraphDoc parse_graph_json(const std::string& text);
std::string graph_json(const GraphDoc& doc);
std::string graph_json(const PlabicGraph& g);

/// {"mode": "projective" | "full", "values": {face id: literal}}
std::string face_weights_json(const PlabicGraph& g, const FaceWeighting<Scalar>& fw);

/// {"n": n, "entries": [[literal, ...], ...]}; throws BadJson.
SMatrix parse_matrix_json(const std::string& text);
std::string matrix_json(const SMatrix& m);

/// The network a graph file describes: its own orientation when complete, else a perfect one.
/// Edge weights take precedence over face weights; without either every edge weighs 1.
Network<Scalar> network_of(const GraphDoc& doc);

std::string read_file(const std::string& path); // throws FileError
void write_file(const std::string& path, const std::string& text);

} // namespace bcnet
