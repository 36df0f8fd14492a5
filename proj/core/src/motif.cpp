// Copyright 2026 the sgm authors
// SPDX-License-Identifier: Apache-2.0

#include "sgm/motif.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>

#include "sgm/errors.hpp"

namespace sgm {

Motif::Motif(int vertex_count, std::vector<std::pair<int, int>> edges, std::string name)
    : vertex_count_(vertex_count), edges_(std::move(edges)), name_(std::move(name)) {
    if (vertex_count_ < 2 || vertex_count_ > kMaxVertices)
        throw DomainError("Motif: vertex count must be in [2, 8]");
    if (edges_.empty()) throw DomainError("Motif: at least one edge required");
    std::vector<bool> covered(static_cast<size_t>(vertex_count_), false);
    for (auto& [a, b] : edges_) {
        if (a > b) std::swap(a, b);
        if (a == b) throw DomainError("Motif: self-loop");
        if (a < 0 || b >= vertex_count_) throw DomainError("Motif: endpoint out of range");
        covered[static_cast<size_t>(a)] = covered[static_cast<size_t>(b)] = true;
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw DomainError("Motif: duplicate edge");
    if (!std::all_of(covered.begin(), covered.end(), [](bool c) { return c; }))
        throw DomainError("Motif: isolated vertex");
}

bool Motif::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

Motif make_builtin(BuiltinMotif which) {
    switch (which) {
        case BuiltinMotif::edge:
            return Motif(2, {{0, 1}}, "edge");
        case BuiltinMotif::two_star:
            return Motif(3, {{0, 1}, {0, 2}}, "two_star");
        case BuiltinMotif::triangle:
            return Motif(3, {{0, 1}, {0, 2}, {1, 2}}, "triangle");
        case BuiltinMotif::square:
            return Motif(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, "square");
    }
    throw DomainError("make_builtin: unknown motif");
}

Motif make_builtin(const std::string& name) {
    if (name == "edge") return make_builtin(BuiltinMotif::edge);
    if (name == "two_star") return make_builtin(BuiltinMotif::two_star);
    if (name == "triangle") return make_builtin(BuiltinMotif::triangle);
    if (name == "square") return make_builtin(BuiltinMotif::square);
    throw DomainError("make_builtin: unknown motif name '" + name + "'");
}

std::vector<std::vector<int>> automorphisms(const Motif& m) {
    const int v = m.vertex_count();
    std::array<std::array<bool, Motif::kMaxVertices>, Motif::kMaxVertices> adj{};
    for (auto [a, b] : m.edges()) adj[a][b] = adj[b][a] = true;

    std::vector<int> perm(static_cast<size_t>(v));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> result;
    do {
        bool ok = true;
        for (auto [a, b] : m.edges()) {
            if (!adj[perm[a]][perm[b]]) {
                ok = false;
                break;
            }
        }
        if (ok) result.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

std::uint64_t automorphism_order(const Motif& m) { return automorphisms(m).size(); }

BigInt copies_in_complete(const Motif& m, long n) {
    if (n < m.vertex_count()) return BigInt(0l);
    BigInt ff = BigInt::falling_factorial(BigInt(n), static_cast<unsigned long>(m.vertex_count()));
    BigInt order(static_cast<unsigned long>(automorphism_order(m)));
    if (!ff.divisible_by(order))
        throw VerificationFailed("copies_in_complete: falling factorial not divisible by group order");
    return ff / order;
}

Motif read_motif(std::istream& in, std::string name) {
    auto next_line = [&in](std::string& line) {
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line)) throw DomainError("read_motif: empty input");
    int v = 0;
    {
        std::istringstream ls(line);
        if (!(ls >> v)) throw DomainError("read_motif: bad vertex count line");
    }
    std::vector<std::pair<int, int>> edges;
    while (next_line(line)) {
        std::istringstream ls(line);
        int a = 0, b = 0;
        if (!(ls >> a >> b)) throw DomainError("read_motif: bad edge line '" + line + "'");
        edges.emplace_back(a, b);
    }
    return Motif(v, std::move(edges), std::move(name));
}

Motif load_motif_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("load_motif_file: cannot open '" + path + "'");
    auto slash = path.find_last_of('/');
    return read_motif(in, slash == std::string::npos ? path : path.substr(slash + 1));
}

void write_motif(std::ostream& out, const Motif& m) {
    out << m.vertex_count() << "\n";
    for (auto [a, b] : m.edges()) out << a << " " << b << "\n";
}

}  // namespace sgm
