#include "pcl/linalg.hpp"

namespace pcl {

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(m[i][c]) != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> nullspace(const Mat& m_in, int cols) {
    Mat m = m_in;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            if (!m.empty() && free < static_cast<int>(m[r].size()))
                v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational det3(const Mat& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat inverse3(const Mat& m) {
    Rational d = det3(m);
    if (sgn(d) == 0) throw error("inverse3: singular matrix");
    Mat a(3, std::vector<Rational>(3));
    a[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
    a[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
    a[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
    a[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
    a[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
    a[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
    a[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
    a[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
    a[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
    return a;
}

} // namespace pcl
