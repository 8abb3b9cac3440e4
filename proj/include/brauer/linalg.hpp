#pragma once

// Exact sparse linear algebra over the rationals.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

namespace brauer {

using Rational = mpq_class;

/// Sparse vector: column index -> nonzero coefficient.
using SparseVector = std::map<int, Rational>;

inline void axpy(SparseVector& target, const Rational& factor, const SparseVector& source) {
    if (factor == 0) return;
    for (const auto& [col, value] : source) {
        auto [it, inserted] = target.try_emplace(col, 0);
        it->second += factor * value;
        if (it->second == 0) target.erase(it);
    }
}

inline void add_entry(SparseVector& target, int col, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = target.try_emplace(col, 0);
    it->second += value;
    if (it->second == 0) target.erase(it);
}

/// Incrementally maintained row echelon form.  Every stored row has its
/// pivot at its smallest column, normalized to one.
class EchelonBasis {
public:
    /// Reduces `v` against the stored rows; the result has no entry in any
    /// pivot column.
    SparseVector reduce(SparseVector v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto row = rows_.find(it->first);
            if (row == rows_.end()) {
                ++it;
                continue;
            }
            const int col = it->first;
            const Rational factor = -it->second;
            axpy(v, factor, row->second);
            it = v.lower_bound(col);
        }
        return v;
    }

    /// Returns true when `v` was independent of the stored rows.
    bool insert(SparseVector v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        const Rational lead = v.begin()->second;
        if (lead != 1) {
            for (auto& [col, value] : v) value /= lead;
        }
        const int pivot = v.begin()->first;
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

    std::size_t rank() const { return rows_.size(); }

    /// Basis of {x : row . x = 0 for every stored row} in `columns` unknowns.
    std::vector<SparseVector> nullspace(int columns) const {
        // Back-substitute into reduced row echelon form.
        std::map<int, SparseVector> rref;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            SparseVector row = it->second;
            for (auto entry = std::next(row.begin()); entry != row.end();) {
                auto done = rref.find(entry->first);
                if (done == rref.end()) {
                    ++entry;
                    continue;
                }
                const int col = entry->first;
                const Rational factor = -entry->second;
                axpy(row, factor, done->second);
                entry = row.upper_bound(col);
            }
            rref.emplace(it->first, std::move(row));
        }
        std::vector<SparseVector> basis;
        for (int free = 0; free < columns; ++free) {
            if (rref.count(free)) continue;
            SparseVector v;
            v.emplace(free, 1);
            for (const auto& [pivot, row] : rref) {
                auto entry = row.find(free);
                if (entry != row.end()) v.emplace(pivot, -entry->second);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    std::map<int, SparseVector> rows_;
};

inline std::size_t rank_of(const std::vector<SparseVector>& rows) {
    EchelonBasis basis;
    for (const auto& row : rows) basis.insert(row);
    return basis.rank();
}

} // namespace brauer
