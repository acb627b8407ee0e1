#pragma once

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace tracedual {

// Row space over F_q kept permanently in reduced row echelon form with the
// pivot columns ascending.  Two RowSpace objects span the same subspace if
// and only if they compare equal, so span equality is a plain comparison.
class RowSpace {
public:
    RowSpace() = default;
    explicit RowSpace(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<Fq>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    friend bool operator==(const RowSpace&, const RowSpace&) = default;

    // Reduces the row against the current basis; inserts the residue if it is
    // nonzero.  Returns true when the rank grew.
    bool insert(const FieldCtx& F, std::vector<Fq> row) {
        if (row.size() != cols_) throw LengthMismatch("row width does not match");
        reduce(F, row);
        std::size_t lead = cols_;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (row[j].v != 0) {
                lead = j;
                break;
            }
        }
        if (lead == cols_) return false;
        Fq s = F.inv(row[lead]);
        for (std::size_t j = lead; j < cols_; ++j) row[j] = F.mul(row[j], s);
        // Back-eliminate the new pivot column from the existing rows.
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Fq c = rows_[i][lead];
            if (c.v == 0) continue;
            for (std::size_t j = lead; j < cols_; ++j)
                rows_[i][j] = F.sub(rows_[i][j], F.mul(c, row[j]));
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        return true;
    }

    bool contains(const FieldCtx& F, std::vector<Fq> row) const {
        if (row.size() != cols_) throw LengthMismatch("row width does not match");
        reduce(F, row);
        for (const Fq& c : row)
            if (c.v != 0) return false;
        return true;
    }

    // Basis of {v : R v = 0} where R is the matrix with these rows: one
    // vector per free column.
    std::vector<std::vector<Fq>> nullspace(const FieldCtx& F) const {
        std::vector<char> is_pivot(cols_, 0);
        for (std::size_t p : pivots_) is_pivot[p] = 1;
        std::vector<std::vector<Fq>> out;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (is_pivot[j]) continue;
            std::vector<Fq> v(cols_, Fq{0});
            v[j] = F.one();
            for (std::size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = F.neg(rows_[i][j]);
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<Fq>> rows_;
    std::vector<std::size_t> pivots_;

    void reduce(const FieldCtx& F, std::vector<Fq>& row) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Fq c = row[pivots_[i]];
            if (c.v == 0) continue;
            const std::vector<Fq>& basis_row = rows_[i];
            for (std::size_t j = pivots_[i]; j < cols_; ++j)
                row[j] = F.sub(row[j], F.mul(c, basis_row[j]));
        }
    }
};

}  // namespace tracedual
