#ifndef PCL_ORBGROUPS_HPP
#define PCL_ORBGROUPS_HPP

#include <string>
#include <vector>

#include "pcl/rational.hpp"

namespace pcl {

// Orbifold fundamental group of the projective line with n punctures and
// weighted points n_1..n_r:
//   < x_1..x_n, y_1..y_r | y_i^{n_i}, x_1...x_n * y_1...y_r >
struct GroupPresentation {
    int punctures;
    std::vector<int> weights;

    std::vector<std::string> generators() const;
    std::vector<std::string> relators() const;
    std::string text() const;
};

GroupPresentation presentation(int n, const std::vector<int>& weights);

// Replace each weight by the given divisor and drop the resulting 1s
// (certificate of surjection onto the smaller group).
std::vector<int> reduce(const std::vector<int>& weights, const std::vector<int>& divisors);

// F_{free_rank} * Z/c_1 * ... * Z/c_r, obtained by eliminating one puncture
// generator through the product relation. Requires n >= 1.
struct NormalForm {
    int free_rank;
    std::vector<int> cyclic_factors; // sorted ascending
};

NormalForm normal_form(int n, const std::vector<int>& weights);

struct NamedGroup {
    enum class Tag {
        Trivial,
        Cyclic,          // data: {m}, m = 0 means Z
        DihedralFinite,  // data: {2m}
        InfiniteDihedral,
        Triangle,        // data: {p, q, r}
        FreeProduct,     // data: factor list, 0 entries mean Z
        Unrecognized,
    };
    Tag tag;
    std::vector<int> data;

    std::string text() const;
    bool operator==(const NamedGroup& o) const { return tag == o.tag && data == o.data; }
};

NamedGroup identify(int n, const std::vector<int>& weights);

enum class RuleVerdict { True, False, NotDecidableByRule };

// true iff the group surjects onto Z/2 * Z/2, decided for n >= 1 by counting
// Z and even cyclic free factors of the normal form.
RuleVerdict surjects_onto_infinite_dihedral(int n, const std::vector<int>& weights);

// Exhaustive count of surjections onto the dihedral group of the given order
// (order even, <= 200).
long count_epimorphisms(int n, const std::vector<int>& weights, int target_order);

} // namespace pcl

#endif
