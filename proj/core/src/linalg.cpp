#include "imagcone/linalg.hpp"

#include <algorithm>

namespace imagcone {

Vec& Vec::operator+=(const Vec& rhs) {
    if (size() != rhs.size()) throw DimensionMismatch();
    for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& rhs) {
    if (size() != rhs.size()) throw DimensionMismatch();
    for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs[i];
    return *this;
}

Vec& Vec::operator*=(const Scalar& c) {
    for (auto& e : entries_) e *= c;
    return *this;
}

Vec Vec::operator-() const {
    Vec out(*this);
    for (auto& e : out.entries_) e = -e;
    return out;
}

bool Vec::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

int Vec::compare(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int c = Scalar::compare_lex(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
    if (a.size() == 0) return Scalar();
    Scalar acc = a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Mat Mat::identity(const Field& f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(f, 1, 1);
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows[0][0].field(), rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw DimensionMismatch();
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Mat::row(std::size_t r) const {
    std::vector<Scalar> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return Vec(std::move(out));
}

Vec Mat::col(std::size_t c) const {
    std::vector<Scalar> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return Vec(std::move(out));
}

Mat Mat::transposed() const {
    Mat out(*this);
    out.rows_ = cols_;
    out.cols_ = rows_;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = at(r, c);
    return out;
}

bool Mat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionMismatch();
    Vec out(data_.empty() ? Field() : data_[0].field(), rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Scalar acc(at(r, 0).field());
        for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch();
    Mat out(data_[0].field(), rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < rhs.cols_; ++c) {
            Scalar acc(data_[0].field());
            for (std::size_t k = 0; k < cols_; ++k) acc += at(r, k) * rhs.at(k, c);
            out.at(r, c) = acc;
        }
    return out;
}

namespace {

// In-place row reduction of an augmented system. Returns pivot (row,col) pairs.
std::vector<std::pair<std::size_t, std::size_t>> eliminate(Mat& a) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < a.cols() && pr < a.rows(); ++pc) {
        std::size_t sel = a.rows();
        for (std::size_t r = pr; r < a.rows(); ++r)
            if (a.at(r, pc).sign() != 0) { sel = r; break; }
        if (sel == a.rows()) continue;
        if (sel != pr)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(pr, c));
        const Scalar inv = a.at(pr, pc).inverse();
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(pr, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pr || a.at(r, pc).is_zero()) continue;
            const Scalar factor = a.at(r, pc);
            for (std::size_t c = 0; c < a.cols(); ++c)
                a.at(r, c) -= factor * a.at(pr, c);
        }
        pivots.emplace_back(pr, pc);
        ++pr;
    }
    return pivots;
}

} // namespace

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (b.size() != m.rows()) throw DimensionMismatch();
    const Field f = m.rows() && m.cols() ? m.at(0, 0).field() : Field();
    Mat aug(f, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    auto pivots = eliminate(aug);
    // Inconsistent if some pivot lands in the augmented column.
    for (auto& [pr, pc] : pivots)
        if (pc == m.cols()) return std::nullopt;
    Vec x(f, m.cols());
    for (auto& [pr, pc] : pivots) x[pc] = aug.at(pr, m.cols());
    return x;
}

std::vector<Vec> kernel_basis(const Mat& m) {
    const Field f = m.rows() && m.cols() ? m.at(0, 0).field() : Field();
    Mat a = m;
    auto pivots = eliminate(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto& [pr, pc] : pivots) is_pivot[pc] = true;
    std::vector<Vec> basis;
    for (std::size_t free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v(f, m.cols());
        v[free_c] = Scalar(f, 1, 1);
        for (auto& [pr, pc] : pivots) v[pc] = -a.at(pr, free_c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch();
    const std::size_t n = m.rows();
    if (n == 0) return Mat();
    const Field f = m.at(0, 0).field();
    Mat aug(f, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = Scalar(f, 1, 1);
    }
    auto pivots = eliminate(aug);
    if (pivots.size() < n || pivots.back().second >= n) return std::nullopt;
    Mat inv(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

Signature signature(const Mat& m) {
    if (!m.is_symmetric()) throw DimensionMismatch("signature needs a symmetric matrix");
    const std::size_t n = m.rows();
    Signature sig;
    if (n == 0) return sig;
    Mat a = m;
    const Field f = a.at(0, 0).field();
    std::size_t cur = 0;
    while (cur < n) {
        std::size_t pivot = n;
        for (std::size_t i = cur; i < n; ++i)
            if (a.at(i, i).sign() != 0) { pivot = i; break; }
        if (pivot == n) {
            // all remaining diagonal entries vanish; find an off-diagonal entry
            std::size_t pi = n, pj = n;
            for (std::size_t i = cur; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a.at(i, j).sign() != 0) { pi = i; pj = j; break; }
            if (pi == n) {
                sig.zero += n - cur;
                return sig;
            }
            // congruence: add row/col pj into pi, making a(pi,pi) = 2 a(pi,pj) != 0
            for (std::size_t c = 0; c < n; ++c) a.at(pi, c) += a.at(pj, c);
            for (std::size_t r = 0; r < n; ++r) a.at(r, pi) += a.at(r, pj);
            pivot = pi;
        }
        if (pivot != cur) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(cur, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(a.at(r, pivot), a.at(r, cur));
        }
        const Scalar d = a.at(cur, cur);
        (d.sign() > 0 ? sig.positive : sig.negative) += 1;
        for (std::size_t r = cur + 1; r < n; ++r) {
            if (a.at(r, cur).is_zero()) continue;
            const Scalar factor = a.at(r, cur) / d;
            for (std::size_t c = 0; c < n; ++c) a.at(r, c) -= factor * a.at(cur, c);
            for (std::size_t c = 0; c < n; ++c) a.at(c, r) -= factor * a.at(c, cur);
        }
        ++cur;
    }
    return sig;
}

std::size_t rank(const Mat& m) {
    Mat a = m;
    return eliminate(a).size();
}

Mat rref(const Mat& m, std::vector<std::size_t>* pivot_cols) {
    Mat a = m;
    auto pivots = eliminate(a);
    if (pivot_cols) {
        pivot_cols->clear();
        for (auto& [pr, pc] : pivots) pivot_cols->push_back(pc);
    }
    return a;
}

std::vector<Vec> canonical_span_basis(const std::vector<Vec>& vectors, const Field& f,
                                      std::size_t dim) {
    if (vectors.empty()) return {};
    Mat m = Mat::from_rows(vectors);
    (void)f;
    (void)dim;
    Mat r = rref(m);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        Vec row = r.row(i);
        if (!row.is_zero()) out.push_back(std::move(row));
    }
    return out;
}

} // namespace imagcone
