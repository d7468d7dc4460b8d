#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polysum/extrema.hpp"
#include "polysum/oracle.hpp"

namespace polysum {

// One row of the theorem-verification matrix: prediction vs. multistart
// search vs. brute-force grid.
struct MatrixRow {
    std::string family;
    int param = 0;
    double lambda = 0.0;
    double hOffset = 0.0;
    double sphereRadius = 0.0;
    std::string predictedMax, predictedMin;
    std::string foundMax, foundMin;
    std::string oracleMax, oracleMin;
    bool valuesAgree = false;   // search extrema vs grid extrema, 1e-7 relative
    bool argsResolved = false;  // grid arg points within grid resolution of the
                                // predicted orbits
    bool pass = false;
};

MatrixRow run_matrix_case(const VertexSet& vs, const SphereSpec& sphere,
                          const PowerSumParams& p, std::size_t gridN, std::uint64_t seed);

/// NGon n = 3..8, lambda in {-2,-1,1,3,2n+1}, h in {0 (R=1.3r), 0.3 (R=r)}.
std::vector<MatrixRow> run_planar_suite(std::size_t gridN, std::uint64_t seed);

/// Simplex dims 2..6, lambda in {-1,1,3,5}, h = 0.1 on the circumsphere.
std::vector<MatrixRow> run_simplex_suite(std::size_t gridN, std::uint64_t seed);

/// Cross-polytope dims 3..6, lambda in {-1,1,3,5,7}, h = 0, R = 1.3r.
std::vector<MatrixRow> run_crosspolytope_suite(std::size_t gridN, std::uint64_t seed);

/// Hypercube dims 3..6, same grid as the cross-polytope suite.
std::vector<MatrixRow> run_hypercube_suite(std::size_t gridN, std::uint64_t seed);

struct DualityRow {
    std::string pair;
    int param = 0;
    double lambda = 0.0;
    bool pass = false;
};

/// Cube/cross-polytope pairs, dims 3..6, lambda in {-1,1,3,5,7}, R = 1.3r.
std::vector<DualityRow> run_duality_suite(std::uint64_t seed);

}  // namespace polysum
