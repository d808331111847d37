#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hammock/quiver.hpp"

namespace hammock {

using EdgeList = std::vector<std::pair<int, int>>;

// vertices named 1..n; every edge oriented both ways, 2^|E| quivers
std::vector<Quiver> all_orientations(int n, const EdgeList &edges);

EdgeList path_edges(int n);
// D_n: path 1-...-(n-1) plus (n-2)-n
EdgeList d_edges(int n);
std::vector<Quiver> type_a_quivers(int n);
std::vector<Quiver> type_d_quivers(int n);

// unlabeled trees on n vertices, one edge list per isomorphism class
std::vector<EdgeList> unlabeled_trees(int n);
// every orientation of every unlabeled tree with 1..max_n vertices
std::vector<Quiver> tree_quivers(int max_n);

// acyclic, no multiple edges: arrows follow a random vertex order
Quiver random_acyclic_quiver(std::mt19937_64 &rng, int n, double p);

std::string quiver_string(const Quiver &q);

}  // namespace hammock
