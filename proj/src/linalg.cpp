#include "soergel/linalg.hpp"

#include <algorithm>

namespace soergel {

namespace {

// row -= c * pivot, both sorted by column; pivot has leading coefficient 1.
void axpy(SparseRow& row, Rat& rhs, const Rat& c, const SparseRow& pivot, const Rat& pivot_rhs) {
    if (c == 0) return;
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -c * pivot[j].second);
            ++j;
        } else {
            Rat v = row[i].second - c * pivot[j].second;
            if (v != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    row = std::move(out);
    rhs -= c * pivot_rhs;
}

// Divide the row by its rational content, keeping the leading coefficient
// positive; keeps entries small through long eliminations.
void normalize_content(SparseRow& row, Rat& rhs) {
    if (row.empty()) return;
    mpz_class g = 0, l = 1;
    for (auto& [c, v] : row) {
        g = gcd(g, v.get_num());
        l = lcm(l, v.get_den());
    }
    if (rhs != 0) {
        g = gcd(g, rhs.get_num());
        l = lcm(l, rhs.get_den());
    }
    Rat scale(l, g);
    scale.canonicalize();
    if (row.front().second < 0) scale = -scale;
    if (scale != 1) {
        for (auto& [c, v] : row) v *= scale;
        rhs *= scale;
    }
}

}  // namespace

RowReducer::RowReducer(int ncols) : ncols_(ncols), pivot_of_col_(ncols, -1) {}

bool RowReducer::add_row(SparseRow row, Rat rhs) {
    fully_reduced_ = false;
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow merged;
    for (auto& [c, v] : row) {
        if (!merged.empty() && merged.back().first == c)
            merged.back().second += v;
        else
            merged.emplace_back(c, v);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& p) { return p.second == 0; }),
                 merged.end());
    row = std::move(merged);

    while (!row.empty()) {
        int lead = row.front().first;
        int p = pivot_of_col_[lead];
        if (p < 0) {
            normalize_content(row, rhs);
            Rat inv = 1 / row.front().second;
            for (auto& [c, v] : row) v *= inv;
            rhs *= inv;
            pivot_of_col_[lead] = (int)pivot_rows_.size();
            pivot_rows_.push_back(std::move(row));
            rhs_.push_back(std::move(rhs));
            return true;
        }
        Rat c = row.front().second;
        axpy(row, rhs, c, pivot_rows_[p], rhs_[p]);
    }
    if (rhs != 0) {
        consistent_ = false;
        return false;
    }
    return true;
}

void RowReducer::back_substitute() const {
    if (fully_reduced_) return;
    // Process pivot rows in decreasing leading column.  Rows reduced earlier
    // in this order end up supported on their leading column plus free
    // columns only, so eliminating one pivot entry never revives another.
    std::vector<int> order(pivot_rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return pivot_rows_[a].front().first > pivot_rows_[b].front().first;
    });
    for (int idx : order) {
        SparseRow& row = pivot_rows_[idx];
        std::vector<std::pair<int, Rat>> to_eliminate;
        for (size_t k = 1; k < row.size(); ++k)
            if (pivot_of_col_[row[k].first] >= 0)
                to_eliminate.emplace_back(row[k].first, row[k].second);
        for (auto& [col, c] : to_eliminate) {
            int p = pivot_of_col_[col];
            axpy(row, rhs_[idx], c, pivot_rows_[p], rhs_[p]);
        }
    }
    fully_reduced_ = true;
}

std::vector<Rat> RowReducer::particular_solution() const {
    back_substitute();
    std::vector<Rat> x(ncols_, Rat(0));
    for (size_t i = 0; i < pivot_rows_.size(); ++i)
        x[pivot_rows_[i].front().first] = rhs_[i];
    return x;
}

std::vector<std::vector<Rat>> RowReducer::nullspace_basis() const {
    back_substitute();
    std::vector<int> free_pos(ncols_, -1);
    int nfree = 0;
    for (int col = 0; col < ncols_; ++col)
        if (pivot_of_col_[col] < 0) free_pos[col] = nfree++;
    std::vector<std::vector<Rat>> basis(nfree, std::vector<Rat>(ncols_, Rat(0)));
    for (int col = 0; col < ncols_; ++col)
        if (free_pos[col] >= 0) basis[free_pos[col]][col] = 1;
    for (const SparseRow& row : pivot_rows_) {
        int lead = row.front().first;
        for (size_t k = 1; k < row.size(); ++k) {
            int col = row[k].first;
            if (free_pos[col] >= 0) basis[free_pos[col]][lead] = -row[k].second;
        }
    }
    return basis;
}

std::vector<Rat> densify(const SparseRow& row, int n) {
    std::vector<Rat> v(n, Rat(0));
    for (const auto& [c, coeff] : row) v[c] = coeff;
    return v;
}

}  // namespace soergel
