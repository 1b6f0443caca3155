#include "equiflow/rational_linalg.hpp"

namespace equiflow::linalg {

void axpy(Column& v, const mpq_class& factor, const Column& w)
{
    for (const auto& [row, value] : w) {
        auto [it, inserted] = v.try_emplace(row, 0);
        it->second -= factor * value;
        if (it->second == 0)
            v.erase(it);
    }
}

ReducedMatrix::ReducedMatrix(std::vector<Column> columns, bool track_kernel)
{
    const std::size_t n = columns.size();
    std::vector<Column> transforms;
    if (track_kernel) {
        transforms.resize(n);
        for (std::size_t j = 0; j < n; ++j)
            transforms[j].emplace(static_cast<int>(j), 1);
    }
    reduced_ = std::move(columns);
    for (std::size_t j = 0; j < n; ++j) {
        Column& col = reduced_[j];
        while (!col.empty()) {
            int low = col.rbegin()->first;
            auto it = pivot_col_.find(low);
            if (it == pivot_col_.end())
                break;
            const Column& pivot = reduced_[static_cast<std::size_t>(it->second)];
            mpq_class factor = col.rbegin()->second / pivot.rbegin()->second;
            axpy(col, factor, pivot);
            if (track_kernel)
                axpy(transforms[j], factor, transforms[static_cast<std::size_t>(it->second)]);
        }
        if (col.empty()) {
            if (track_kernel)
                kernel_.push_back(std::move(transforms[j]));
        } else {
            pivot_col_.emplace(col.rbegin()->first, static_cast<int>(j));
            ++rank_;
        }
    }
}

bool ReducedMatrix::spans(Column v) const
{
    while (!v.empty()) {
        auto it = pivot_col_.find(v.rbegin()->first);
        if (it == pivot_col_.end())
            return false;
        const Column& pivot = reduced_[static_cast<std::size_t>(it->second)];
        axpy(v, v.rbegin()->second / pivot.rbegin()->second, pivot);
    }
    return true;
}

}  // namespace equiflow::linalg
