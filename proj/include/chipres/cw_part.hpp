#ifndef CHIPRES_CW_PART_HPP
#define CHIPRES_CW_PART_HPP

#include <utility>
#include <vector>

#include "chipres/multipoly.hpp"
#include "chipres/partitions.hpp"

namespace chipres {

struct Cell {
    AcyclicPartition partition;
    int dimension = 0;  // number of blocks minus two; the empty cell has -1
    Monomial label;
    std::vector<std::pair<int, int>> facets;  // (index one dimension down, incidence)
};

/// Labeled cell poset of n-acyclic partitions under contraction. Level d+1
/// holds the cells of dimension d; level 0 is the empty cell, the 1-partition.
struct CWPoset {
    int n = 0;
    std::vector<std::vector<Cell>> levels;

    int top_dimension() const { return static_cast<int>(levels.size()) - 2; }
    const std::vector<Cell>& cells(int dimension) const { return levels.at(dimension + 1); }
    std::vector<Cell>& cells(int dimension) { return levels.at(dimension + 1); }
};

CWPoset build_part(const Multigraph& g);

bool check_label_lcm(const CWPoset& p);

struct AcyclicityReport {
    std::vector<Monomial> failures;  // label joins with nonzero reduced homology
    int checked = 0;
    bool ok() const { return failures.empty(); }
};

/// Reduced homology of the subcomplex of cells whose labels divide b, at every
/// join of labels.
AcyclicityReport check_cellular_acyclicity(const CWPoset& p);
/// Reduced homology dimensions of that subcomplex, indexed by dimension + 1.
std::vector<int> reduced_homology_below(const CWPoset& p, const Monomial& b);

struct SphereReport {
    std::vector<std::pair<int, int>> failures;  // (dimension, index)
    int checked = 0;
    bool ok() const { return failures.empty(); }
};

/// The boundary of every cell of dimension k >= 1 has the homology of a (k-1)-sphere.
SphereReport check_boundary_spheres(const CWPoset& p);

/// Cells below both of two faces of a common cell form a closed cell or nothing.
bool check_meets(const CWPoset& p);

}  // namespace chipres

#endif
