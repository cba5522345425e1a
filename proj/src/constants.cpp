#include "g2split/constants.hpp"

#include <algorithm>
#include <set>

namespace g2split {

namespace {
std::vector<Int> ints(std::initializer_list<long> v) {
    std::vector<Int> out;
    for (long x : v) out.emplace_back(x);
    return out;
}
std::vector<Int> minus(const std::vector<Int>& a, std::initializer_list<long> drop) {
    std::set<Int> d;
    for (long x : drop) d.emplace(x);
    std::vector<Int> out;
    for (const auto& x : a)
        if (!d.count(x)) out.push_back(x);
    return out;
}
}  // namespace

const std::vector<Int>& set_D1() {
    static const auto v = ints({3, 4, 7, 8, 11, 19, 43, 67, 163});
    return v;
}

const std::vector<Int>& set_D2() {
    static const auto v = ints({15, 20, 24, 35, 40, 51, 52, 88, 91, 115, 123, 148, 187, 232, 235,
                                267, 403, 427});
    return v;
}

const std::vector<Int>& set_D22() {
    static const auto v = ints({84, 120, 132, 168, 195, 228, 280, 312, 340, 372, 408, 435, 483,
                                520, 532, 555, 595, 627, 708, 715, 760, 795, 1012, 1435});
    return v;
}

const std::vector<Int>& set_D22S() {
    static const auto v = minus(set_D22(), {195, 312, 340, 555, 715, 760});
    return v;
}

const std::vector<Int>& set_D22J() {
    static const auto v = minus(set_D22S(), {280, 483, 595, 627, 795});
    return v;
}

AlgebraCensus algebra_census() {
    AlgebraCensus c;
    const long n1 = static_cast<long>(set_D1().size());

    // products: Q x Q; Q x Q(sqrt(-d)); distinct pairs from the class-number-1 list
    // squares: M2(Q); M2(Q(sqrt(-d)))
    std::set<Int> unionAS;
    for (const auto& d : set_D1()) unionAS.insert(d);
    for (const auto& d : set_D2()) unionAS.insert(d);
    for (const auto& d : set_D22S()) unionAS.insert(d);
    c.count_A = 1 + n1 + n1 * (n1 - 1) / 2 + 1 + static_cast<long>(unionAS.size());

    c.product_pairs_B = {{Int(4), Int(3)}, {Int(7), Int(4)}, {Int(8), Int(4)}};
    std::set<Int> unionBJ;
    for (const auto& d : set_D1()) unionBJ.insert(d);
    for (const auto& d : set_D2()) unionBJ.insert(d);
    for (const auto& d : set_D22J()) unionBJ.insert(d);
    c.m2_fields_B = {unionBJ.begin(), unionBJ.end()};
    std::sort(c.m2_fields_B.begin(), c.m2_fields_B.end());
    c.count_B = 1 + n1 + static_cast<long>(c.product_pairs_B.size()) + 1 +
                static_cast<long>(unionBJ.size());
    return c;
}

}  // namespace g2split
