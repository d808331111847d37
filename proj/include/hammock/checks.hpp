#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hammock/quiver.hpp"

namespace hammock {

// A: every orientation of A_n, D: of D_n, T: every oriented tree with up to n vertices,
// R: that many random acyclic quivers
struct SweepItem {
    char family = 'A';
    int lo = 1;
    int hi = 1;
};

// "A1-6,D4-5,T6,R100"; throws std::invalid_argument on bad syntax or guard-rail breach
std::vector<SweepItem> parse_sweep(const std::string &spec);
std::string default_sweep();

struct CheckLine {
    std::string suite;
    std::string quiver;
    bool ok = true;
    std::string detail;
};

struct CheckOptions {
    bool inject_fault = false;  // compare standard characters at F := +1
    std::uint64_t seed = 20240101;
};

enum class Suite : unsigned {
    Mesh = 1,          // quasi-additivity of hammock functions
    HammockMesh = 2,   // mesh relation for hammock multisets (Dynkin)
    Family = 4,        // exceptional family properties
    RoundTrip = 8,     // compose/decompose of dominant objects
    TSystem = 16,
    Standard = 32,     // standard Euler characteristics
    Cluster = 64,      // simple Euler characteristics vs F-polynomials (type A)
    All = 127,
};

std::vector<CheckLine> check_quiver(const Quiver &q, unsigned suites, const CheckOptions &opt = {});
std::vector<CheckLine> run_sweep(const std::vector<SweepItem> &items, const CheckOptions &opt = {});

// all multisets of size 1..k drawn from 0..m-1
std::vector<std::vector<int>> small_multisets(int m, int k);

}  // namespace hammock
