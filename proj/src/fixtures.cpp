#include "illusion/fixtures.hpp"

#include <array>

#include "illusion/error.hpp"

namespace illusion {

LabelledNetwork fixture_fig1() {
    enum : NodeId { A, B, C, D, E, E2, F, G, H };
    NetworkBuilder b;
    b.add_nodes(9);
    const std::array<NodeId, 4> clique{A, B, C, D};
    b.add_clique(clique);
    b.add_edge(E, C);
    b.add_edge(E2, F);
    b.add_edge(E2, B);
    b.add_edge(E2, A);
    b.add_edge(F, A);
    b.add_edge(F, B);
    // Drawn next to B, but B would then tie 3:3; hanging G off D keeps every node illuded.
    b.add_edge(G, D);
    b.add_edge(H, D);
    Labelling lab(9, Colour::blue);
    for (NodeId v : clique) lab[v] = Colour::red;
    LabelledNetwork ln(b.build(), std::move(lab));
    const auto report = illusion_report(ln);
    if (report.global_winner != Colour::blue || report.illuded_count != 9) {
        fail(ErrorKind::construction, "fig1 fixture lost its full illusion");
    }
    return ln;
}

} // namespace illusion
