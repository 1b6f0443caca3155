#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace equiflow::linalg {

/// Sparse column over Q: row index -> nonzero entry.
using Column = std::map<int, mpq_class>;

/**
 * Column-reduced form R = D V of a sparse rational matrix D.
 *
 * Reduction is the left-to-right pivot elimination: every nonzero column of
 * R ends at a distinct lowest row ("pivot"). Nonzero columns of R span the
 * column space; columns of V whose R column vanished span the kernel.
 */
class ReducedMatrix {
public:
    ReducedMatrix(std::vector<Column> columns, bool track_kernel);

    int rank() const { return rank_; }
    /// Kernel basis (only populated when constructed with track_kernel).
    const std::vector<Column>& kernel() const { return kernel_; }
    /// Whether `v` lies in the column space of D.
    bool spans(Column v) const;

private:
    std::vector<Column> reduced_;
    std::map<int, int> pivot_col_;
    std::vector<Column> kernel_;
    int rank_ = 0;
};

/// v -= factor * w
void axpy(Column& v, const mpq_class& factor, const Column& w);

}  // namespace equiflow::linalg
