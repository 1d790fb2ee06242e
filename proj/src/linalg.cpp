#include "dua/linalg.hpp"

#include <algorithm>
#include <set>

namespace dua::linalg {

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pr = row;
        while (pr < rows && m[pr][col].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[row], m[pr]);
        FieldElem inv = m[row][col].inverse();
        for (std::size_t c = col; c < cols; ++c) m[row][c] = m[row][c] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            FieldElem f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

std::vector<Vec> nullspace(Mat m, const Field& field) {
    std::vector<Vec> basis;
    if (m.empty()) return basis;
    std::size_t cols = m[0].size();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec x(cols, field.zero());
        x[free] = field.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

bool in_row_span(const Mat& m, const Vec& v) {
    Mat a = m;
    std::size_t base = rank(a);
    a = m;
    a.push_back(v);
    return rank(a) == base;
}

bool same_row_space(const Mat& a, const Mat& b) {
    if (a.empty()) return rank(b) == 0;
    if (b.empty()) return rank(a) == 0;
    Mat stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    std::size_t rs = rank(stacked);
    return rs == rank(a) && rs == rank(b);
}

Mat coordinates(const std::vector<Element>& elems, std::vector<PBWMono>& index_out) {
    std::set<PBWMono> support;
    for (const auto& e : elems)
        for (const auto& [mono, c] : e.terms()) support.insert(mono);
    index_out.assign(support.begin(), support.end());
    Mat m;
    for (const auto& e : elems) {
        Vec row;
        row.reserve(index_out.size());
        for (const auto& mono : index_out) row.push_back(e.coeff_of(mono));
        m.push_back(std::move(row));
    }
    return m;
}

} // namespace dua::linalg
