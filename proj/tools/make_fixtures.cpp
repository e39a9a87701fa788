// Writes the drawn figures as graph JSON files into the given directory.

#include "bcnet/fixtures.hpp"
#include "bcnet/io.hpp"

#include <iostream>

using namespace bcnet;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_fixtures <dir>\n";
        return 2;
    }
    const std::string dir = argv[1];
    const Env env{{"y1", Scalar(3)}, {"y2", Scalar(5)}, {"y3", Scalar::frac(2, 7)}, {"y4", Scalar(11)}};

    auto f1 = fig1_network();
    write_file(dir + "/fig1.json",
               graph_json(GraphDoc{f1.graph, f1.orient, std::vector<Scalar>(f1.graph.num_edges(), Scalar(1)), std::nullopt}));
    PlabicGraph g4 = symmetric_square_graph();
    write_file(dir + "/fig4.json", graph_json(GraphDoc{g4, std::nullopt, std::nullopt, evaluate(fig4_weighting(), env)}));
    PlabicGraph g7 = fig7_graph();
    write_file(dir + "/fig7.json", graph_json(GraphDoc{g7, std::nullopt, std::nullopt, evaluate(fig7_weighting(), env)}));
    write_file(dir + "/fig8.json", graph_json(fig8_graph()));
    write_file(dir + "/fig9.json", graph_json(fig9_graph()));
    return 0;
}
