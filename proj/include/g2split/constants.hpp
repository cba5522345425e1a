#ifndef G2SPLIT_CONSTANTS_HPP
#define G2SPLIT_CONSTANTS_HPP

#include <utility>
#include <vector>

#include "g2split/rational.hpp"

namespace g2split {

// class-number sets (absolute values of fundamental discriminants)
const std::vector<Int>& set_D1();    // h = 1
const std::vector<Int>& set_D2();    // h = 2
const std::vector<Int>& set_D22();   // Cl = Z/2 x Z/2
const std::vector<Int>& set_D22S();  // D22 minus the Nakamura exclusions
const std::vector<Int>& set_D22J();  // D22S minus the moduli-count exclusions

struct AlgebraCensus {
    long count_A = 0;  // abelian surfaces
    long count_B = 0;  // Jacobians of genus 2 curves
    std::vector<std::pair<Int, Int>> product_pairs_B;  // surviving (d, d') products
    std::vector<Int> m2_fields_B;                      // d with M2(Q(sqrt(-d))) realizable
};

AlgebraCensus algebra_census();

}  // namespace g2split

#endif
