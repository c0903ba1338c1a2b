#pragma once

#include "tiltlab/catalog.hpp"
#include "tiltlab/complex.hpp"
#include "tiltlab/laurent.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tiltlab {

using ExchangeMatrix = std::vector<std::vector<std::int64_t>>;

// Coefficient-free seed: skew-symmetric exchange matrix and a cluster of
// Laurent polynomials in the initial variables.
struct Seed {
    ExchangeMatrix exchange_matrix;
    std::vector<LaurentPoly> cluster;
    bool operator==(const Seed&) const = default;
};

bool is_skew_symmetric(const ExchangeMatrix& b);

// b(i,j) = #(i -> j) - #(j -> i); the cluster is x_1..x_n.
Seed initial_seed(const Quiver& q);

// x_k' = (prod_{b(i,k)>0} x_i^b(i,k) + prod_{b(i,k)<0} x_i^-b(i,k)) / x_k, and
// b'(i,j) = -b(i,j) if k in {i,j}, else b(i,j) + (|b(i,k)| b(k,j) + b(i,k) |b(k,j)|) / 2.
Seed mutate(const Seed& s, std::size_t k);

struct ClusterEnumeration {
    std::vector<LaurentPoly> variables;             // discovery order, initial variables first
    std::vector<std::vector<std::size_t>> clusters;  // sorted indices into variables
    std::size_t depth = 0;   // largest mutation depth visited
    bool partial = false;    // new clusters lie beyond the depth cap
};

// Breadth-first mutation closure from the initial seed, with clusters
// identified as unordered sets of variables.
ClusterEnumeration enumerate_clusters(const Quiver& q, std::size_t cap);

struct CorrespondenceReport {
    std::size_t variables = 0;
    std::size_t clusters = 0;
    std::size_t maximal_simplices = 0;
    bool enumeration_complete = false;
    bool bijection = false;       // denominators onto catalog dims and -e_i
    bool clusters_match = false;  // clusters <-> maximal simplices of the prime complex
    bool fan_restatement = false;
    std::size_t monomials_checked = 0;
    std::vector<std::string> mismatches;
    [[nodiscard]] bool ok() const { return enumeration_complete && bijection && clusters_match && fan_restatement; }
};

// Dynkin quivers only. Compares the cluster algebra with the prime complex of
// the catalog: variables, clusters, and for monomials of degree <= 2 in
// compatible variables, membership in a cluster against its cone inequalities.
CorrespondenceReport correspondence_check(const Quiver& q, const ExceptionalCatalog& c);

}  // namespace tiltlab
