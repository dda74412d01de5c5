#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "accordion/fan.hpp"
#include "accordion/polytope.hpp"

namespace accordion {

// n=<int>;parity=<hollow|solid>;diagonals=<a-b>,<a-b>,...
Dissection parse_dissection(std::string_view text);
std::string format_dissection(const Dissection& d);

nlohmann::json diagonal_list_json(const std::vector<Diagonal>& ds);
nlohmann::json vector_json(const Dissection& reference, const IntVector& v);
nlohmann::json fan_json(const Fan& fan, const FanCertificate& certificate);
nlohmann::json polytope_json(const PolytopeRep& polytope);
nlohmann::json flip_graph_json(const OrientedFlipGraph& graph);

std::string emit_dot(const OrientedFlipGraph& graph);

struct Point2 {
    double x = 0;
    double y = 0;
};

// Stereographic picture of a fan in dimension 3, seen from the pole
// pole_sign * (1,1,1). The maximal cone containing the pole becomes the
// unbounded outer face.
struct StereoLayout {
    std::vector<Diagonal> labels;
    std::vector<Point2> points;                                // aligned with labels
    std::vector<std::pair<int, int>> edges;                    // ray index pairs
    std::vector<std::vector<Point2>> arcs;                     // sampled, aligned with edges
    std::vector<int> outer;                                    // ray indices of the outer cone
    std::vector<Point2> outer_boundary;
};

StereoLayout stereographic_layout(const Fan& fan, int pole_sign);
std::string emit_svg_stereographic(const Fan& fan, int pole_sign);

}  // namespace accordion
