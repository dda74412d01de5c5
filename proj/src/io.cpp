#include "accordion/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace accordion {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ == text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    void expect(std::string_view word) {
        if (text_.substr(pos_, word.size()) != word)
            throw ParseError(pos_, "expected '" + std::string(word) + "'");
        pos_ += word.size();
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    int integer() {
        const std::size_t start = pos_;
        long value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > std::numeric_limits<int>::max()) throw ParseError(start, "integer too large");
            ++pos_;
        }
        if (pos_ == start) throw ParseError(start, "expected an integer");
        return static_cast<int>(value);
    }

    std::string_view word() {
        const std::size_t start = pos_;
        while (!done() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Dissection parse_dissection(std::string_view text) {
    Cursor in(text);
    in.expect("n=");
    const std::size_t n_at = in.pos();
    const int n = in.integer();
    if (n < 3) throw ParseError(n_at, "the polygon needs at least 3 vertices of each parity");
    in.expect(";parity=");
    const std::size_t parity_at = in.pos();
    std::string_view p = in.word();
    Parity parity;
    if (p == "hollow") parity = Parity::Hollow;
    else if (p == "solid") parity = Parity::Solid;
    else throw ParseError(parity_at, "parity must be 'hollow' or 'solid'");
    in.expect(";diagonals=");
    std::vector<Diagonal> ds;
    if (!in.done()) {
        do {
            const std::size_t at = in.pos();
            int a = in.integer();
            in.expect("-");
            int b = in.integer();
            if (a == b) throw ParseError(at, "a diagonal needs two distinct endpoints");
            ds.emplace_back(a, b);
        } while (in.accept(','));
    }
    if (!in.done()) throw ParseError(in.pos(), "unexpected trailing input");
    return Dissection(n, parity, std::move(ds));
}

std::string format_dissection(const Dissection& d) {
    std::string out = "n=" + std::to_string(d.n()) + ";parity=" + parity_name(d.parity()) + ";diagonals=";
    for (std::size_t i = 0; i < d.diagonals().size(); ++i) {
        if (i) out += ',';
        out += to_string(d.diagonals()[i]);
    }
    return out;
}

nlohmann::json diagonal_list_json(const std::vector<Diagonal>& ds) {
    nlohmann::json out = nlohmann::json::array();
    for (const Diagonal& d : ds) out.push_back(to_string(d));
    return out;
}

nlohmann::json vector_json(const Dissection& reference, const IntVector& v) {
    return {{"basis", diagonal_list_json(reference.diagonals())}, {"coords", v.coords()}};
}

namespace {

const char* failure_name(FanFailureKind k) {
    switch (k) {
        case FanFailureKind::RankDeficient: return "rank-deficient";
        case FanFailureKind::ConeOverlap: return "cone-overlap";
        case FanFailureKind::SignMismatch: return "sign-mismatch";
    }
    return "?";
}

std::string rational_string(const Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

}  // namespace

nlohmann::json fan_json(const Fan& fan, const FanCertificate& certificate) {
    const Dissection& reference = fan.graph.reference;
    nlohmann::json rays = nlohmann::json::array();
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        rays.push_back({{"diagonal", to_string(fan.labels[i])}, {"coords", fan.rays[i].coords()}});
    nlohmann::json failures = nlohmann::json::array();
    for (const FanFailure& f : certificate.failures) {
        nlohmann::json j{{"kind", failure_name(f.kind)}};
        if (f.face >= 0) j["face"] = diagonal_list_json(fan.graph.nodes[f.face].diagonals());
        if (f.other >= 0) j["other"] = diagonal_list_json(fan.graph.nodes[f.other].diagonals());
        if (!f.support.empty()) {
            nlohmann::json dep = nlohmann::json::object();
            for (std::size_t i = 0; i < f.support.size(); ++i) dep[to_string(f.support[i])] = rational_string(f.coefficients[i]);
            j["dependence"] = dep;
        }
        failures.push_back(j);
    }
    return {{"basis", diagonal_list_json(reference.diagonals())},
            {"rays", rays},
            {"cones", fan.cones},
            {"certificate",
             {{"ok", certificate.ok},
              {"base_face", diagonal_list_json(fan.graph.nodes[certificate.base_face].diagonals())},
              {"base_is_basis", certificate.base_is_basis},
              {"flips_checked", certificate.dependences.size()},
              {"failures", failures}}}};
}

nlohmann::json polytope_json(const PolytopeRep& polytope) {
    nlohmann::json vertices = nlohmann::json::array(), halfspaces = nlohmann::json::array();
    for (const VertexPoint& v : polytope.vertices)
        vertices.push_back({{"face", diagonal_list_json(v.face)}, {"point", v.point.coords()}});
    for (const HalfSpace& h : polytope.halfspaces)
        halfspaces.push_back({{"diagonal", to_string(h.label)}, {"normal", h.normal.coords()}, {"rhs", h.rhs}});
    return {{"basis", diagonal_list_json(polytope.reference.diagonals())},
            {"dim", polytope.dim},
            {"vertices", vertices},
            {"halfspaces", halfspaces}};
}

nlohmann::json flip_graph_json(const OrientedFlipGraph& graph) {
    nlohmann::json nodes = nlohmann::json::array(), arcs = nlohmann::json::array();
    for (const AccordionFace& f : graph.nodes) nodes.push_back(diagonal_list_json(f.diagonals()));
    for (const FlipArc& a : graph.arcs)
        arcs.push_back({{"from", a.from}, {"to", a.to}, {"removed", to_string(a.removed)}, {"added", to_string(a.added)}});
    return {{"reference", format_dissection(graph.reference)}, {"nodes", nodes}, {"arcs", arcs}};
}

std::string emit_dot(const OrientedFlipGraph& graph) {
    std::ostringstream out;
    out << "digraph flips {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"";
        const auto& ds = graph.nodes[i].diagonals();
        for (std::size_t j = 0; j < ds.size(); ++j) out << (j ? " " : "") << to_string(ds[j]);
        out << "\"];\n";
    }
    for (const FlipArc& a : graph.arcs)
        out << "  n" << a.from << " -> n" << a.to << " [label=\"" << to_string(a.removed) << "→"
            << to_string(a.added) << "\"];\n";
    out << "}\n";
    return out.str();
}

namespace {

struct Vec3 {
    double x, y, z;
};

Vec3 unit(const IntVector& v) {
    Vec3 r{static_cast<double>(v[0]), static_cast<double>(v[1]), static_cast<double>(v[2])};
    double len = std::sqrt(r.x * r.x + r.y * r.y + r.z * r.z);
    return {r.x / len, r.y / len, r.z / len};
}

constexpr int arc_samples = 24;

}  // namespace

StereoLayout stereographic_layout(const Fan& fan, int pole_sign) {
    if (fan.dim() != 3) throw Error(ErrorKind::WrongDimension, "stereographic rendering needs exactly 3 reference diagonals");
    const double s = pole_sign > 0 ? 1.0 : -1.0;
    const Vec3 pole{s / std::sqrt(3.0), s / std::sqrt(3.0), s / std::sqrt(3.0)};
    // Orthonormal basis of the plane orthogonal to the pole.
    const Vec3 e1{1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0};
    const Vec3 e2{1 / std::sqrt(6.0), 1 / std::sqrt(6.0), -2 / std::sqrt(6.0)};
    auto dot = [](const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; };
    auto project = [&](const Vec3& u) {
        double denom = 1 - dot(u, pole);
        if (denom < 1e-12) throw std::logic_error("a ray points at the projection pole");
        return Point2{dot(u, e1) / denom, dot(u, e2) / denom};
    };
    auto arc = [&](const Vec3& u, const Vec3& v) {
        std::vector<Point2> pts;
        for (int i = 0; i <= arc_samples; ++i) {
            double t = static_cast<double>(i) / arc_samples;
            Vec3 w{(1 - t) * u.x + t * v.x, (1 - t) * u.y + t * v.y, (1 - t) * u.z + t * v.z};
            double len = std::sqrt(dot(w, w));
            pts.push_back(project({w.x / len, w.y / len, w.z / len}));
        }
        return pts;
    };

    StereoLayout out;
    out.labels = fan.labels;
    std::vector<Vec3> dirs;
    for (const IntVector& r : fan.rays) {
        dirs.push_back(unit(r));
        out.points.push_back(project(dirs.back()));
    }
    std::set<std::pair<int, int>> edges;
    for (const auto& cone : fan.cones)
        for (std::size_t i = 0; i < cone.size(); ++i)
            for (std::size_t j = i + 1; j < cone.size(); ++j)
                edges.emplace(std::min(cone[i], cone[j]), std::max(cone[i], cone[j]));
    for (const auto& [a, b] : edges) {
        out.edges.emplace_back(a, b);
        out.arcs.push_back(arc(dirs[a], dirs[b]));
    }

    IntVector pole_vector(std::vector<std::int64_t>{pole_sign, pole_sign, pole_sign});
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        auto coords = cone_coordinates(fan, static_cast<int>(c), pole_vector);
        if (coords && std::all_of(coords->begin(), coords->end(), [](const Rational& x) { return x > Rational(0); })) {
            out.outer = fan.cones[c];
            break;
        }
    }
    if (out.outer.size() != 3) throw std::logic_error("the pole lies on a wall of the fan");
    for (std::size_t i = 0; i < 3; ++i) {
        auto piece = arc(dirs[out.outer[i]], dirs[out.outer[(i + 1) % 3]]);
        out.outer_boundary.insert(out.outer_boundary.end(), piece.begin(), piece.end() - 1);
    }
    return out;
}

std::string emit_svg_stereographic(const Fan& fan, int pole_sign) {
    StereoLayout layout = stereographic_layout(fan, pole_sign);
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    auto grow = [&](const Point2& p) {
        lo_x = std::min(lo_x, p.x), hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y), hi_y = std::max(hi_y, p.y);
    };
    for (const auto& p : layout.outer_boundary) grow(p);
    for (const auto& a : layout.arcs)
        for (const auto& p : a) grow(p);

    const double size = 600, margin = 40;
    const double scale = (size - 2 * margin) / std::max(hi_x - lo_x, hi_y - lo_y);
    auto fmt = [&](const Point2& p) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f,%.3f", margin + (p.x - lo_x) * scale, size - margin - (p.y - lo_y) * scale);
        return std::string(buf);
    };
    auto polyline = [&](const std::vector<Point2>& pts) {
        std::string s;
        for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + fmt(pts[i]);
        return s;
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
    out << "  <polygon class=\"outer\" fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"1.5\" points=\""
        << polyline(layout.outer_boundary) << "\"/>\n";
    for (std::size_t i = 0; i < layout.arcs.size(); ++i)
        out << "  <polyline class=\"arc\" fill=\"none\" stroke=\"black\" data-rays=\""
            << to_string(layout.labels[layout.edges[i].first]) << " " << to_string(layout.labels[layout.edges[i].second])
            << "\" points=\"" << polyline(layout.arcs[i]) << "\"/>\n";
    for (std::size_t i = 0; i < layout.points.size(); ++i) {
        std::string p = fmt(layout.points[i]);
        std::string x = p.substr(0, p.find(',')), y = p.substr(p.find(',') + 1);
        out << "  <circle class=\"ray\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\"/>\n";
        out << "  <text x=\"" << x << "\" y=\"" << y << "\" dx=\"6\" dy=\"-6\" font-size=\"12\">"
            << to_string(layout.labels[i]) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace accordion
