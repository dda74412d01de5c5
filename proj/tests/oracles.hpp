#pragma once

// Brute-force reference implementations used only by the tests. They take
// the most literal route to each definition and share no code with the
// library beyond Diagonal, crosses and the cell list of a dissection.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "accordion/polygon.hpp"

namespace oracle {

using accordion::Diagonal;
using accordion::Dissection;

inline bool is_solid_boundary(int n, const Diagonal& d) {
    const int gap = d.b - d.a;
    return gap == 2 || gap == 2 * n - 2;
}

// A solid segment passes through a chain of cells of the barred reference.
// In each cell it enters and exits through two edges; an accordion diagonal
// needs those two edges to share a vertex.
inline bool is_accordion_diagonal(const Dissection& ref, const Diagonal& d) {
    if (d.a % 2 != 0 || is_solid_boundary(ref.n(), d)) return false;
    for (const auto& cell : ref.cells()) {
        std::vector<Diagonal> hit;
        for (const auto& e : cell.edges)
            if (accordion::crosses(e, d)) hit.push_back(e);
        if (hit.size() == 2 && !hit[0].shares_endpoint(hit[1])) return false;
    }
    return true;
}

inline std::vector<Diagonal> accordion_diagonals(const Dissection& ref) {
    std::vector<Diagonal> out;
    const int m = 2 * ref.n();
    for (int a = 2; a <= m; a += 2)
        for (int b = a + 2; b <= m; b += 2)
            if (oracle::is_accordion_diagonal(ref, Diagonal(a, b))) out.emplace_back(a, b);
    return out;
}

inline bool compatible(const std::vector<Diagonal>& ds) {
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j)
            if (accordion::crosses(ds[i], ds[j])) return false;
    return true;
}

// Bron-Kerbosch without pivoting on the non-crossing graph.
inline void bron_kerbosch(const std::vector<Diagonal>& verts, std::vector<int> r, std::vector<int> p,
                          std::vector<int> x, std::set<std::vector<Diagonal>>& out) {
    if (p.empty() && x.empty()) {
        std::vector<Diagonal> face;
        for (int i : r) face.push_back(verts[i]);
        std::sort(face.begin(), face.end());
        out.insert(face);
        return;
    }
    while (!p.empty()) {
        const int v = p.back();
        auto keep = [&](const std::vector<int>& s) {
            std::vector<int> t;
            for (int u : s)
                if (u != v && !accordion::crosses(verts[u], verts[v])) t.push_back(u);
            return t;
        };
        std::vector<int> r2 = r;
        r2.push_back(v);
        bron_kerbosch(verts, r2, keep(p), keep(x), out);
        p.pop_back();
        x.push_back(v);
    }
}

inline std::set<std::vector<Diagonal>> maximal_faces(const Dissection& ref) {
    const auto verts = oracle::accordion_diagonals(ref);
    std::vector<int> all(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) all[i] = static_cast<int>(i);
    std::set<std::vector<Diagonal>> out;
    bron_kerbosch(verts, {}, all, {}, out);
    return out;
}

// Every accordion diagonal other than d that completes face minus d.
inline std::vector<Diagonal> flip_partners(const std::vector<Diagonal>& accordion, const std::vector<Diagonal>& face,
                                           const Diagonal& d) {
    std::vector<Diagonal> rest;
    for (const auto& e : face)
        if (e != d) rest.push_back(e);
    std::vector<Diagonal> out;
    for (const auto& e : accordion) {
        if (e == d || std::find(rest.begin(), rest.end(), e) != rest.end()) continue;
        std::vector<Diagonal> trial = rest;
        trial.push_back(e);
        if (compatible(trial)) out.push_back(e);
    }
    return out;
}

inline std::vector<Diagonal> flip_partners(const Dissection& ref, const std::vector<Diagonal>& face,
                                           const Diagonal& d) {
    return flip_partners(oracle::accordion_diagonals(ref), face, d);
}

inline std::int64_t height(const Dissection& ref, const Diagonal& d) {
    std::int64_t k = 0;
    for (const auto& e : oracle::accordion_diagonals(ref))
        if (accordion::crosses(e, d)) ++k;
    return k;
}

// Number of ways to choose pairwise non-crossing internal diagonals of one
// parity: the little Schroeder numbers, counted by backtracking.
inline int count_dissections(int n) {
    std::vector<Diagonal> ds;
    const int m = 2 * n;
    for (int a = 1; a <= m; a += 2)
        for (int b = a + 4; b <= m; b += 2)
            if (!(a == 1 && b == m - 1)) ds.emplace_back(a, b);
    int count = 0;
    std::vector<Diagonal> chosen;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == ds.size()) {
            ++count;
            return;
        }
        self(self, i + 1);
        for (const auto& c : chosen)
            if (accordion::crosses(c, ds[i])) return;
        chosen.push_back(ds[i]);
        self(self, i + 1);
        chosen.pop_back();
    };
    rec(rec, 0);
    return count;
}

}  // namespace oracle
