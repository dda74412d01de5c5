#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "accordion/polygon.hpp"

namespace accordion {

// Faces of the accordion complex are stored as dissections of the opposite
// parity, which gives their cells for free.
using AccordionFace = Dissection;

std::vector<Diagonal> accordion_diagonals(const Dissection& reference);
bool is_accordion_diagonal(const Dissection& reference, const Diagonal& d);
bool is_accordion_dissection(const Dissection& reference, const Dissection& face);
bool is_maximal_accordion_dissection(const Dissection& reference, const Dissection& face);

// All dissections of the n-gon of the given parity, in canonical order.
std::vector<Dissection> all_dissections(int n, Parity parity);

struct FlipRecord {
    AccordionFace from;
    AccordionFace to;
    Diagonal removed;
    Diagonal added;
    Diagonal mu;
    Diagonal nu;
};

FlipRecord flip(const Dissection& reference, const AccordionFace& face, const Diagonal& d);
FlipRecord reversed(const FlipRecord& record);

enum class FlipDirection { Increasing, Decreasing };

FlipDirection flip_direction(const Dissection& reference, const FlipRecord& record);

struct FlipArc {
    int from = 0;
    int to = 0;
    Diagonal removed;
    Diagonal added;
    Diagonal mu;
    Diagonal nu;
};

struct OrientedFlipGraph {
    Dissection reference;
    std::vector<AccordionFace> nodes;  // canonical order
    std::vector<FlipArc> arcs;         // oriented along increasing flips

    std::optional<int> find(const AccordionFace& face) const;
    FlipRecord record(const FlipArc& arc) const;
    std::vector<int> sources() const;
    std::vector<int> sinks() const;
};

OrientedFlipGraph oriented_flip_graph(const Dissection& reference);

// Every face of the complex (all subsets of maximal faces), canonical order.
std::vector<std::vector<Diagonal>> all_faces(const OrientedFlipGraph& graph);

struct LatticeResult {
    bool is_lattice = true;
    std::optional<std::pair<int, int>> witness;
};

LatticeResult lattice_check(const OrientedFlipGraph& graph);

// A factor of a join decomposition or of a link, living on its own smaller
// polygon. The relabeling carries diagonals of the original polygon over.
struct JoinFactor {
    Dissection dissection;
    Relabeling relabeling;
};

std::vector<JoinFactor> decompose(const Dissection& reference);
std::vector<JoinFactor> link(const Dissection& reference, const AccordionFace& face);

// Contracts consecutive boundary edges of non-triangular cells until none are
// left. Never applied implicitly.
JoinFactor normalize_reduction(const Dissection& reference);

struct ReciprocityResult {
    bool forward = false;   // solid maximal for the hollow reference
    bool backward = false;  // hollow maximal for the solid reference
    bool holds() const { return forward == backward; }
};

ReciprocityResult reciprocity_check(const Dissection& hollow, const Dissection& solid);

std::vector<int> cell_sequence(const Dissection& d);

}  // namespace accordion
